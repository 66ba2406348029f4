#include "nowhere/construction.hpp"

#include <string>

namespace nowhere {

void require_unit_interval(const Rat& x, const char* what) {
  if (x < Rat(-1) || x > Rat(1)) {
    throw DomainError(std::string(what) + ": argument " + x.str() + " outside [-1, 1]");
  }
}

namespace {

bool is_absorber(const Rat& y) { return y.is_zero() || y.abs() == Rat(1); }

// f_1 on [0, 1]; the odd extension handles negative arguments.
Rat f1_nonnegative(const Rat& x) {
  static const Rat kHalf(1, 2);
  if (x == Rat(1)) return Rat(0);
  if (x < kHalf) return x * Rat(2);
  // x lies in [1 - 1/n, 1 - 1/(n+1)) with n = floor(1 / (1 - x)).
  const Rat inv = Rat(1) / (Rat(1) - x);
  const BigInt n = inv.floor();
  const Rat rn(n);
  const Rat t = (x - (Rat(1) - Rat(1) / rn)) * rn * (rn + Rat(1));
  const Rat v = Rat(1) - Rat(2) * t;
  return mpz_odd_p(n.get_mpz_t()) ? -v : v;
}

}  // namespace

Rat eval_f1(const Rat& x) {
  require_unit_interval(x, "f1");
  return x.sign() < 0 ? -f1_nonnegative(-x) : f1_nonnegative(x);
}

Rat OrbitInfo::iterate(int l) const {
  if (l <= 0) return start;
  if (static_cast<std::size_t>(l) <= values.size()) return values[static_cast<std::size_t>(l) - 1];
  if (absorbed_step && l > *absorbed_step) return Rat(0);
  return eval_fk(values.empty() ? start : values.back(), l - static_cast<int>(values.size()));
}

OrbitInfo orbit(const Rat& x, int depth) {
  require_unit_interval(x, "orbit");
  if (depth < 1) throw std::invalid_argument("orbit depth must be positive");
  OrbitInfo out;
  out.start = x;
  out.depth_limit = depth;
  out.values.reserve(static_cast<std::size_t>(depth));
  Rat y = x;
  for (int step = 1; step <= depth; ++step) {
    y = eval_f1(y);
    out.values.push_back(y);
    if (is_absorber(y)) {
      out.absorbed_step = step;
      out.absorber = y.sign();
      break;
    }
  }
  return out;
}

Rat eval_fk(const Rat& x, int k) {
  require_unit_interval(x, "fk");
  if (k < 1) throw std::invalid_argument("iterate index must be positive");
  Rat y = x;
  for (int step = 1; step <= k; ++step) {
    if (y.is_zero()) return y;
    y = eval_f1(y);
  }
  return y;
}

Rat partial_sum(const Rat& x, int terms) {
  require_unit_interval(x, "partial_sum");
  if (terms < 1) throw std::invalid_argument("term count must be positive");
  Rat sum;
  Rat y = x;
  Rat weight(1);
  const Rat half(1, 2);
  for (int k = 1; k <= terms; ++k) {
    y = eval_f1(y);
    weight *= half;
    if (y.is_zero()) break;
    sum += y * weight;
  }
  return sum;
}

Certified eval_f(const Rat& x, int terms) {
  require_unit_interval(x, "f");
  if (terms < 1) throw std::invalid_argument("term count must be positive");
  Rat sum;
  Rat y = x;
  Rat weight(1);
  const Rat half(1, 2);
  for (int k = 1; k <= terms; ++k) {
    y = eval_f1(y);
    weight *= half;
    sum += y * weight;
    if (is_absorber(y)) return {sum, Rat(0)};
  }
  return {sum, Rat::pow2(-terms)};
}

Certified eval_g(const Rat& x, int terms) {
  Certified c = eval_f(x, terms);
  if (x.sign() < 0) c.center = -c.center;
  if (x.is_zero()) return {Rat(0), Rat(0)};
  return c;
}

}  // namespace nowhere
