#include "nowhere/rat.hpp"

#include <cctype>
#include <ostream>

namespace nowhere {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat::Rat(const BigInt& num, const BigInt& den) : q_(num, den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

BigInt Rat::floor() const {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return out;
}

Rat Rat::pow2(long e) {
  BigInt p;
  const unsigned long mag = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  mpz_ui_pow_ui(p.get_mpz_t(), 2, mag);
  return e < 0 ? Rat(BigInt(1), p) : Rat(p);
}

Rat Rat::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational");
  bool negative = false;
  std::string_view body = text;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Rat out;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto p = body.substr(0, slash);
    const auto q = body.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) throw ParseError("malformed rational: " + std::string(text));
    const BigInt den(std::string(q), 10);
    if (den == 0) throw ParseError("zero denominator: " + std::string(text));
    out = Rat(BigInt(std::string(p), 10), den);
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const auto whole = body.substr(0, dot);
    const auto frac = body.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw ParseError("malformed decimal: " + std::string(text));
    }
    const std::string digits = std::string(whole) + std::string(frac);
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    out = Rat(BigInt(digits, 10), scale);
  } else {
    if (!all_digits(body)) throw ParseError("malformed rational: " + std::string(text));
    out = Rat(BigInt(std::string(body), 10));
  }
  return negative ? -out : out;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace nowhere
