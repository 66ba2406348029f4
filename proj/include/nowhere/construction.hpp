#pragma once

/// @file construction.hpp
/// @brief Exact evaluation of the base map f_1, its iterates f_k, the partial
/// sums S_K = sum_{k<=K} f_k / 2^k and certified enclosures of the series f and
/// of the signed variant g(x) = f(x) sign(x).
///
/// Every function here is pure; inputs outside [-1, 1] raise DomainError.

#include "nowhere/rat.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace nowhere {

/// Number of series terms used when the caller does not choose one.
inline constexpr int kDefaultTerms = 30;

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Throws DomainError unless -1 <= x <= 1.
void require_unit_interval(const Rat& x, const char* what);

/// Value enclosure [center - radius, center + radius]; radius 0 means exact.
struct Certified {
  Rat center;
  Rat radius;

  bool exact() const { return radius.is_zero(); }
  Rat lower() const { return center - radius; }
  Rat upper() const { return center + radius; }
  bool contains(const Rat& v) const { return lower() <= v && v <= upper(); }

  friend bool operator==(const Certified&, const Certified&) = default;
};

/// The iteration y_0 = start, y_l = f_1(y_{l-1}) up to a depth limit, stopped
/// at the first value in {-1, 0, +1}. After absorption every later iterate is 0.
struct OrbitInfo {
  Rat start;
  std::vector<Rat> values;  // y_1 .. y_m
  std::optional<int> absorbed_step;
  std::optional<int> absorber;  // -1, 0 or +1
  int depth_limit = 0;

  bool absorbed() const { return absorbed_step.has_value(); }
  /// Absorbed at +-1, i.e. start lies in some exceptional set E_k.
  bool absorbed_at_unit() const { return absorber.has_value() && *absorber != 0; }
  /// f_l(start) for 1 <= l, using absorption for l past the recorded values.
  Rat iterate(int l) const;
};

Rat eval_f1(const Rat& x);

OrbitInfo orbit(const Rat& x, int depth);

Rat eval_fk(const Rat& x, int k);

/// S_K(x) = sum_{k=1..K} f_k(x) / 2^k.
Rat partial_sum(const Rat& x, int terms);

/// Exact if the orbit absorbs within `terms` steps, otherwise S_K with radius 2^-K.
Certified eval_f(const Rat& x, int terms = kDefaultTerms);

Certified eval_g(const Rat& x, int terms = kDefaultTerms);

}  // namespace nowhere
