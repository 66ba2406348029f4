#pragma once

/// @file verifier.hpp
/// @brief Constructive witness searches. Each search returns a WitnessReport
/// whose verdict rests only on exact rational comparisons recorded in its
/// certificate; `recheck` reproduces a verdict from the report alone using the
/// construction and cells modules.

#include "nowhere/antiderivative.hpp"
#include "nowhere/cells.hpp"
#include "nowhere/construction.hpp"
#include "nowhere/rat.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nowhere {

/// Misuse of a witness search: a precondition such as "x0 is an E-point" fails.
class WitnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class WitnessKind {
  oscillation,
  non_extremum,
  non_monotone,
  local_min,
  quotient_bound,
  structure,
  integral_crosscheck,
  darboux,
};

enum class Relation { lt, le, eq, ge, gt };

enum class Verdict { pass, fail };

const char* to_string(WitnessKind kind);
const char* to_string(Relation rel);
const char* to_string(Verdict verdict);

/// One checked instance `lhs rel rhs` between exact rationals.
struct Inequality {
  std::string label;
  Rat lhs;
  Relation rel = Relation::eq;
  Rat rhs;

  bool holds() const;
};

/// What the `value` of a WitnessPoint is.
enum class Quantity {
  partial_sum,     // S_index(x)
  iterate,         // f_index(x)
  antiderivative,  // F_index(x)
};

const char* to_string(Quantity q);

struct WitnessPoint {
  std::string label;
  Rat x;
  Quantity quantity = Quantity::partial_sum;
  int index = 1;
  Rat value;
};

struct WitnessReport {
  WitnessKind kind = WitnessKind::structure;
  std::map<std::string, std::string> inputs;
  std::vector<WitnessPoint> points;
  std::vector<Inequality> certificate;
  Verdict verdict = Verdict::fail;
  std::string diagnostic;

  bool passed() const { return verdict == Verdict::pass; }
};

/// Recomputes every inequality and every point value; true iff the recorded
/// values are reproduced and the recomputed verdict equals the stored one.
bool recheck(const WitnessReport& report);

/// Least k with x in E_k, decided by orbit absorption at +-1 within `depth` steps.
std::optional<int> first_exceptional_level(const Rat& x, int depth);

struct SearchOptions {
  int depth = 40;
  /// Number of candidate cells scanned per side after the first one inside the
  /// neighbourhood.
  long search_budget = 4096;
};

WitnessReport oscillation_witness(const Rat& x0, const Rat& delta, const SearchOptions& options = {});

WitnessReport non_extremum_witness(const Rat& x0, const Rat& delta, int depth);

WitnessReport non_monotone_witness(const Rat& a, const Rat& b, int depth);

WitnessReport local_min_check(const Rat& x);

WitnessReport quotient_bound_check(int k, long n, const Rat& x);

WitnessReport structure_check(int k, long index_budget);

WitnessReport integral_crosscheck(int k, const std::vector<Rat>& xs, long budget,
                                  const std::optional<Rat>& max_width = std::nullopt);

/// Encloses the integral of f over [-1, 1]; passes iff the enclosure holds 0
/// (and its width is at most `max_width`, when given).
WitnessReport darboux_check(int terms, long cells_budget,
                            const std::optional<Rat>& max_width = std::nullopt);

}  // namespace nowhere
