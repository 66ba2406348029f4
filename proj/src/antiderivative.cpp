#include "nowhere/antiderivative.hpp"

#include "nowhere/cells.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace nowhere {

Rat eval_F0(const Rat& x) {
  require_unit_interval(x, "F0");
  return (x * x - Rat(1)) / Rat(2);
}

namespace {

// Slope of f_1 on a level-1 cell containing y; |y| < 1. At shared endpoints
// either neighbour works because F_{k-1} vanishes at +-1.
Affine level1_map_at(const Rat& y) { return level1_cell(locate_level1(y).front()).map; }

}  // namespace

Rat eval_Fk(const Rat& x, int k) {
  require_unit_interval(x, "Fk");
  if (k < 0) throw std::invalid_argument("Fk: negative index");
  Rat y = x;
  Rat scale(1);
  for (int step = 0; step < k; ++step) {
    if (y.abs() == Rat(1)) return Rat(0);
    const Affine map = level1_map_at(y);
    scale *= map.slope;
    y = map(y);
  }
  return eval_F0(y) / scale;
}

Certified eval_F(const Rat& x, int terms) {
  require_unit_interval(x, "F");
  if (terms < 1) throw std::invalid_argument("F: term count must be positive");
  Rat sum;
  Rat y = x;
  Rat scale(1);
  Rat weight(1);
  const Rat half(1, 2);
  for (int k = 1; k <= terms; ++k) {
    if (y.abs() == Rat(1)) break;  // every remaining F_k(x) is 0
    const Affine map = level1_map_at(y);
    scale *= map.slope;
    y = map(y);
    weight *= half;
    sum += eval_F0(y) / scale * weight;
  }
  return {sum, Rat::pow2(1 - terms)};
}

Rat normalization_constant(int terms) {
  return -(Rat(1) - Rat::pow2(-2L * terms)) / Rat(6);
}

Certified eval_G(const Rat& x, int terms) {
  require_unit_interval(x, "G");
  if (x.is_zero()) return {Rat(0), Rat(0)};
  const Certified F = eval_F(x, terms);
  Rat center = F.center - normalization_constant(terms);
  if (x.sign() < 0) center = -center;
  return {center, F.radius * Rat(2)};
}

namespace {

Enclosure scaled(const Enclosure& e, const Rat& positive_factor) {
  return {e.lower * positive_factor, e.upper * positive_factor};
}

Enclosure& accumulate(Enclosure& into, const Enclosure& e) {
  into.lower += e.lower;
  into.upper += e.upper;
  return into;
}

// Integrates f_m over [u, v] by walking the admitted level-1 cells. On a
// level-1 cell f_m = f_{m-1} o (affine), so each piece reduces to level m - 1
// by an affine change of variables; at m = 0 the integrand is the identity and
// the integral is exact. Runs of whole cells all reduce to the same full-range
// integral of f_{m-1}, which is memoized, so the work is linear in m rather
// than in the number of enumerated cells.
class CellIntegrator {
 public:
  explicit CellIntegrator(long budget)
      : budget_(budget),
        covered_lo_(Rat(-1) + Rat(1) / Rat(budget + 2)),
        covered_hi_(Rat(1) - Rat(1) / Rat(budget + 2)) {}

  Enclosure integrate(int m, const Rat& u, const Rat& v) {
    if (u == v) return {};
    if (m == 0) {
      const Rat exact = (v * v - u * u) / Rat(2);
      return {exact, exact};
    }
    if (u == Rat(-1) && v == Rat(1)) return full(m);
    return integrate_uncached(m, u, v);
  }

  Enclosure full(int m) {
    if (m == 0) return {};  // odd integrand
    const auto at = static_cast<std::size_t>(m);
    if (at < full_.size() && full_[at]) return *full_[at];
    Enclosure e = integrate_uncached(m, Rat(-1), Rat(1));
    if (full_.size() <= at) full_.resize(at + 1);
    full_[at] = e;
    return e;
  }

 private:
  Enclosure integrate_uncached(int m, const Rat& u, const Rat& v) {
    Enclosure out;
    Rat gap;
    if (u < covered_lo_) gap += min(v, covered_lo_) - u;
    if (v > covered_hi_) gap += v - max(u, covered_hi_);
    out.lower -= gap;
    out.upper += gap;

    const Rat a = max(u, covered_lo_);
    const Rat b = min(v, covered_hi_);
    if (!(a < b)) return out;

    const Level1Id ja = locate_level1(a).back();   // cell extending right of a
    const Level1Id jb = locate_level1(b).front();  // cell extending left of b
    const Cell ca = level1_cell(ja);
    if (ja == jb) return accumulate(out, piece(m, ca, a, b));

    const Cell cb = level1_cell(jb);
    accumulate(out, piece(m, ca, a, ca.hi));
    accumulate(out, piece(m, cb, cb.lo, b));
    // Whole cells strictly between: sum of 1/|slope| equals half their total length.
    const Rat run = cb.lo - ca.hi;
    if (run.sign() > 0) accumulate(out, scaled(full(m - 1), run / Rat(2)));
    return out;
  }

  Enclosure piece(int m, const Cell& c, const Rat& p, const Rat& q) {
    const Rat yp = c.map(p);
    const Rat yq = c.map(q);
    const Rat& slope = c.map.slope;
    if (slope.sign() > 0) return scaled(integrate(m - 1, yp, yq), Rat(1) / slope);
    return scaled(integrate(m - 1, yq, yp), Rat(-1) / slope);
  }

  long budget_;
  Rat covered_lo_;
  Rat covered_hi_;
  std::vector<std::optional<Enclosure>> full_;
};

}  // namespace

Enclosure enclose_integral(int k, const Rat& from, const Rat& to, long index_budget) {
  require_unit_interval(from, "enclose_integral");
  require_unit_interval(to, "enclose_integral");
  if (k < 1) throw std::invalid_argument("enclose_integral: level must be positive");
  if (index_budget < 0) throw std::invalid_argument("enclose_integral: negative budget");
  if (to < from) {
    const Enclosure e = enclose_integral(k, to, from, index_budget);
    return {-e.upper, -e.lower};
  }
  CellIntegrator integrator(index_budget);
  return integrator.integrate(k, from, to);
}

Enclosure enclose_integral(int k, const Rat& upto, long index_budget) {
  return enclose_integral(k, Rat(-1), upto, index_budget);
}

Enclosure darboux_gap(int terms, long cells_budget) {
  if (terms < 1) throw std::invalid_argument("darboux_gap: term count must be positive");
  if (cells_budget < 0) throw std::invalid_argument("darboux_gap: negative budget");
  CellIntegrator integrator(cells_budget);
  Enclosure out;
  for (int k = 1; k <= terms; ++k) accumulate(out, scaled(integrator.full(k), Rat::pow2(-k)));
  const Rat tail = Rat::pow2(1 - terms);
  out.lower -= tail;
  out.upper += tail;
  return out;
}

}  // namespace nowhere
