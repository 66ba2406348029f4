#pragma once

/// @file rat.hpp
/// @brief Exact rational scalar used everywhere in the library.
///
/// A thin value type over GMP's mpq_class. Values are always canonical
/// (lowest terms, positive denominator); there is no floating-point path.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nowhere {

using BigInt = mpz_class;

/// Thrown when text cannot be read as an exact rational.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Rat {
 public:
  Rat() = default;
  Rat(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rat(int value) : q_(static_cast<long>(value)) {}  // NOLINT
  explicit Rat(const BigInt& value) : q_(value) {}
  Rat(const BigInt& num, const BigInt& den);
  Rat(long num, long den) : Rat(BigInt(num), BigInt(den)) {}

  /// Reads "p/q", an integer, or a plain decimal such as "-0.125".
  /// Decimals are converted exactly to p/10^m.
  static Rat parse(std::string_view text);

  /// 2^e for any sign of e.
  static Rat pow2(long e);

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rat abs() const { return Rat(::abs(q_)); }
  /// Largest integer not above the value.
  BigInt floor() const;

  /// Canonical text: "p/q" in lowest terms, or just "p" for integers.
  std::string str() const { return q_.get_str(); }

  const mpq_class& get() const { return q_; }

  Rat operator-() const { return Rat(mpq_class(-q_)); }

  Rat& operator+=(const Rat& o) {
    q_ += o.q_;
    return *this;
  }
  Rat& operator-=(const Rat& o) {
    q_ -= o.q_;
    return *this;
  }
  Rat& operator*=(const Rat& o) {
    q_ *= o.q_;
    return *this;
  }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

inline Rat min(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

/// Sign of a big integer as -1, 0, +1.
inline int sign_of(const BigInt& v) { return sgn(v); }

/// Three-way comparison for big integers.
inline std::strong_ordering compare(const BigInt& a, const BigInt& b) {
  const int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace nowhere
