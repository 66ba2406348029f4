#include "nowhere/verifier.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace nowhere {

const char* to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::oscillation: return "oscillation";
    case WitnessKind::non_extremum: return "non_extremum";
    case WitnessKind::non_monotone: return "non_monotone";
    case WitnessKind::local_min: return "local_min";
    case WitnessKind::quotient_bound: return "quotient_bound";
    case WitnessKind::structure: return "structure";
    case WitnessKind::integral_crosscheck: return "integral_crosscheck";
    case WitnessKind::darboux: return "darboux";
  }
  return "unknown";
}

const char* to_string(Relation rel) {
  switch (rel) {
    case Relation::lt: return "<";
    case Relation::le: return "<=";
    case Relation::eq: return "==";
    case Relation::ge: return ">=";
    case Relation::gt: return ">";
  }
  return "?";
}

const char* to_string(Verdict verdict) { return verdict == Verdict::pass ? "pass" : "fail"; }

const char* to_string(Quantity q) {
  switch (q) {
    case Quantity::partial_sum: return "S";
    case Quantity::iterate: return "f";
    case Quantity::antiderivative: return "F";
  }
  return "?";
}

bool Inequality::holds() const {
  switch (rel) {
    case Relation::lt: return lhs < rhs;
    case Relation::le: return lhs <= rhs;
    case Relation::eq: return lhs == rhs;
    case Relation::ge: return lhs >= rhs;
    case Relation::gt: return lhs > rhs;
  }
  return false;
}

namespace {

Verdict judge(const WitnessReport& r) {
  if (!r.diagnostic.empty() || r.certificate.empty()) return Verdict::fail;
  for (const auto& c : r.certificate) {
    if (!c.holds()) return Verdict::fail;
  }
  return Verdict::pass;
}

WitnessReport& finalize(WitnessReport& r) {
  r.verdict = judge(r);
  return r;
}

Rat evaluate(Quantity q, const Rat& x, int index) {
  switch (q) {
    case Quantity::partial_sum: return partial_sum(x, index);
    case Quantity::iterate: return eval_fk(x, index);
    case Quantity::antiderivative: return eval_Fk(x, index);
  }
  return Rat(0);
}

WitnessPoint point(std::string label, const Rat& x, Quantity q, int index) {
  return WitnessPoint{std::move(label), x, q, index, evaluate(q, x, index)};
}

std::string lvl(const char* name, int k) { return std::string(name) + "_" + std::to_string(k); }

}  // namespace

bool recheck(const WitnessReport& report) {
  for (const auto& p : report.points) {
    if (evaluate(p.quantity, p.x, p.index) != p.value) return false;
  }
  return judge(report) == report.verdict;
}

std::optional<int> first_exceptional_level(const Rat& x, int depth) {
  require_unit_interval(x, "first_exceptional_level");
  if (x.abs() == Rat(1)) return 1;
  const OrbitInfo o = orbit(x, depth);
  if (o.absorbed_at_unit()) return *o.absorbed_step + 1;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Oscillation at exceptional points
// ---------------------------------------------------------------------------

namespace {

struct Candidate {
  Rat x;
  Rat f;  // exact f(x) = S_k(x)
};

// Cells of level k accumulate at x0 from each side. Their endpoints are the
// preimages of +-(1 - 1/n) under the affine f_{k-1} of the neighbouring
// level-(k-1) cell, where f_k takes the values +-1 and the orbit ends at 0.
struct OscillationSide {
  Cell parent;
  Rat end;  // f_{k-1}(x0), +-1
  BigInt n_start;
  std::optional<Candidate> high;
  std::optional<Candidate> low;

  bool complete() const { return high && low; }
};

struct OscillationSearch {
  Rat x0;
  Rat delta;
  int k = 1;
  Rat f0;
  std::vector<OscillationSide> sides;
};

OscillationSearch scan_oscillation(const Rat& x0, const Rat& delta, const SearchOptions& options,
                                   bool same_side) {
  if (!(delta.sign() > 0)) throw WitnessError("oscillation: delta must be positive");
  const auto level = first_exceptional_level(x0, options.depth);
  if (!level) throw WitnessError("not an E-point within depth " + std::to_string(options.depth) + ": " + x0.str());

  OscillationSearch s;
  s.x0 = x0;
  s.delta = delta;
  s.k = *level;
  s.f0 = partial_sum(x0, s.k);

  std::vector<Cell> parents;
  if (s.k == 1) {
    parents.push_back(root_cell());
  } else {
    for (const auto& a : locate(x0, s.k - 1)) parents.push_back(cell(a));
  }
  for (auto& p : parents) {
    OscillationSide side;
    side.end = p.map(x0);
    // Need 1/(n |slope|) < delta.
    const Rat reach = Rat(1) / (delta * p.map.slope.abs());
    side.n_start = reach.floor() + 1;
    if (side.n_start < 2) side.n_start = 2;
    side.parent = std::move(p);
    s.sides.push_back(std::move(side));
  }

  const Rat offset = Rat::pow2(-(s.k + 1));
  const Rat upper = s.f0 + offset;
  const Rat lower = s.f0 - offset;
  auto done = [&] {
    if (same_side) {
      return std::any_of(s.sides.begin(), s.sides.end(), [](const auto& d) { return d.complete(); });
    }
    const bool hi = std::any_of(s.sides.begin(), s.sides.end(), [](const auto& d) { return d.high.has_value(); });
    const bool lo = std::any_of(s.sides.begin(), s.sides.end(), [](const auto& d) { return d.low.has_value(); });
    return hi && lo;
  };

  for (long step = 0; step <= options.search_budget && !done(); ++step) {
    for (auto& side : s.sides) {
      if (side.complete()) continue;
      const Rat n(BigInt(side.n_start + step));
      const Rat y = side.end * (Rat(1) - Rat(1) / n);
      const Rat fk = eval_f1(y);
      if ((fk.sign() > 0 && side.high) || (fk.sign() < 0 && side.low)) continue;
      const Rat x = side.parent.map.solve(y);
      Rat f = partial_sum(x, s.k);
      if (fk.sign() > 0 && f > upper) side.high = Candidate{x, std::move(f)};
      else if (fk.sign() < 0 && f < lower) side.low = Candidate{x, std::move(f)};
    }
  }
  return s;
}

void certify_offset_pair(WitnessReport& r, const OscillationSearch& s, const Candidate& high,
                         const Candidate& low) {
  const int k = s.k;
  const Rat offset = Rat::pow2(-(k + 1));
  r.points.push_back(point("x0", s.x0, Quantity::partial_sum, k));
  r.points.push_back(point("x1", high.x, Quantity::partial_sum, k));
  r.points.push_back(point("x2", low.x, Quantity::partial_sum, k));
  r.certificate.push_back({lvl("f", k) + "(x0) == 0", eval_fk(s.x0, k), Relation::eq, Rat(0)});
  r.certificate.push_back({lvl("f", k) + "(x1) == 1", eval_fk(high.x, k), Relation::eq, Rat(1)});
  r.certificate.push_back({lvl("f", k + 1) + "(x1) == 0", eval_fk(high.x, k + 1), Relation::eq, Rat(0)});
  r.certificate.push_back({lvl("f", k) + "(x2) == -1", eval_fk(low.x, k), Relation::eq, Rat(-1)});
  r.certificate.push_back({lvl("f", k + 1) + "(x2) == 0", eval_fk(low.x, k + 1), Relation::eq, Rat(0)});
  r.certificate.push_back({"|x1 - x0| > 0", (high.x - s.x0).abs(), Relation::gt, Rat(0)});
  r.certificate.push_back({"|x1 - x0| < delta", (high.x - s.x0).abs(), Relation::lt, s.delta});
  r.certificate.push_back({"|x2 - x0| > 0", (low.x - s.x0).abs(), Relation::gt, Rat(0)});
  r.certificate.push_back({"|x2 - x0| < delta", (low.x - s.x0).abs(), Relation::lt, s.delta});
  r.certificate.push_back({"f(x1) > f(x0) + 2^-(k+1)", high.f, Relation::gt, s.f0 + offset});
  r.certificate.push_back({"f(x2) < f(x0) - 2^-(k+1)", low.f, Relation::lt, s.f0 - offset});
}

template <typename Pick>
std::optional<std::pair<Candidate, Candidate>> pick_pair(const OscillationSearch& s, Pick&& pick) {
  std::optional<Candidate> high;
  std::optional<Candidate> low;
  for (const auto& side : s.sides) pick(side, high, low);
  if (high && low) return std::make_pair(*high, *low);
  return std::nullopt;
}

std::optional<std::pair<Candidate, Candidate>> any_side_pair(const OscillationSearch& s) {
  return pick_pair(s, [](const OscillationSide& side, auto& high, auto& low) {
    if (!high && side.high) high = side.high;
    if (!low && side.low) low = side.low;
  });
}

}  // namespace

WitnessReport oscillation_witness(const Rat& x0, const Rat& delta, const SearchOptions& options) {
  const OscillationSearch s = scan_oscillation(x0, delta, options, false);
  WitnessReport r;
  r.kind = WitnessKind::oscillation;
  r.inputs = {{"x0", x0.str()}, {"delta", delta.str()}, {"first_level", std::to_string(s.k)}};
  if (const auto pair = any_side_pair(s)) {
    certify_offset_pair(r, s, pair->first, pair->second);
  } else {
    r.diagnostic = "search budget exhausted";
  }
  return finalize(r);
}

// ---------------------------------------------------------------------------
// No local extrema
// ---------------------------------------------------------------------------

WitnessReport non_extremum_witness(const Rat& x0, const Rat& delta, int depth) {
  require_unit_interval(x0, "non_extremum_witness");
  if (!(delta.sign() > 0)) throw WitnessError("non_extremum: delta must be positive");
  if (depth < 2) throw WitnessError("non_extremum: depth must be at least 2");

  WitnessReport r;
  r.kind = WitnessKind::non_extremum;
  r.inputs = {{"x0", x0.str()}, {"delta", delta.str()}, {"depth", std::to_string(depth)}};

  if (first_exceptional_level(x0, depth)) {
    SearchOptions options;
    options.depth = depth;
    const OscillationSearch s = scan_oscillation(x0, delta, options, false);
    r.inputs["route"] = "oscillation";
    r.inputs["first_level"] = std::to_string(s.k);
    if (const auto pair = any_side_pair(s)) {
      certify_offset_pair(r, s, pair->first, pair->second);
      r.certificate.push_back({"(f(x1) - f(x0)) (f(x2) - f(x0)) < 0",
                               (pair->first.f - s.f0) * (pair->second.f - s.f0), Relation::lt, Rat(0)});
    } else {
      r.diagnostic = "search budget exhausted";
    }
    return finalize(r);
  }

  // x0 sits in the interior of a level-k cell for every k < depth. On such a
  // cell S_k is affine; take the first k where the cell fits inside the
  // neighbourhood and S_k has nonzero slope.
  r.inputs["route"] = "interior";
  Rat sum_slope;
  Address address;
  for (int k = 1; k < depth; ++k) {
    const auto located = locate(x0, k);
    if (located.size() != 1) {
      r.diagnostic = "x0 is not interior at level " + std::to_string(k);
      return finalize(r);
    }
    address = located.front();
    const Cell c = cell(address);
    sum_slope += c.map.slope * Rat::pow2(-k);
    if (!(x0 - delta < c.lo && c.hi < x0 + delta) || sum_slope.is_zero()) continue;

    // Level-(k+1) sub-cells strictly on each side of x0 are preimages of
    // level-1 cells strictly below / above y0 = f_k(x0). Inside them pick the
    // point where f_{k+1} equals f_{k+1}(x0); all later terms then agree too.
    const Rat y0 = c.map(x0);
    const Rat v = eval_f1(y0);
    const auto here = locate_level1(y0);
    BigInt below = here.front().j - 1;
    if (!(level1_cell(Level1Id(below)).hi < y0)) below -= 1;
    BigInt above = here.back().j + 1;
    if (!(level1_cell(Level1Id(above)).lo > y0)) above += 1;

    auto preimage = [&](const BigInt& j) {
      const Cell a = level1_cell(Level1Id(j));
      return c.map.solve(a.map.solve(v));
    };
    Rat x1 = preimage(below);
    Rat x2 = preimage(above);
    if (x2 < x1) std::swap(x1, x2);

    r.inputs["level"] = std::to_string(k);
    r.inputs["cell"] = address.str();
    r.points.push_back(point("x0", x0, Quantity::partial_sum, k));
    r.points.push_back(point("x1", x1, Quantity::partial_sum, k));
    r.points.push_back(point("x2", x2, Quantity::partial_sum, k));
    const Rat s0 = partial_sum(x0, k);
    const Rat s1 = partial_sum(x1, k);
    const Rat s2 = partial_sum(x2, k);
    const Rat fx0 = eval_fk(x0, k + 1);
    r.certificate.push_back({"x1 < x0", x1, Relation::lt, x0});
    r.certificate.push_back({"x0 < x2", x0, Relation::lt, x2});
    r.certificate.push_back({"x0 - x1 < delta", x0 - x1, Relation::lt, delta});
    r.certificate.push_back({"x2 - x0 < delta", x2 - x0, Relation::lt, delta});
    r.certificate.push_back({lvl("f", k + 1) + "(x1) == " + lvl("f", k + 1) + "(x0)", eval_fk(x1, k + 1), Relation::eq, fx0});
    r.certificate.push_back({lvl("f", k + 1) + "(x2) == " + lvl("f", k + 1) + "(x0)", eval_fk(x2, k + 1), Relation::eq, fx0});
    r.certificate.push_back({"(S_k(x1) - S_k(x0)) (S_k(x2) - S_k(x0)) < 0", (s1 - s0) * (s2 - s0), Relation::lt, Rat(0)});
    return finalize(r);
  }
  r.diagnostic = "depth exhausted: no level below " + std::to_string(depth) + " fits inside the neighbourhood";
  return finalize(r);
}

// ---------------------------------------------------------------------------
// Nowhere monotone
// ---------------------------------------------------------------------------

WitnessReport non_monotone_witness(const Rat& a, const Rat& b, int depth) {
  require_unit_interval(a, "non_monotone_witness");
  require_unit_interval(b, "non_monotone_witness");
  if (!(a < b)) throw WitnessError("non_monotone: need a < b");

  WitnessReport r;
  r.kind = WitnessKind::non_monotone;
  r.inputs = {{"a", a.str()}, {"b", b.str()}, {"depth", std::to_string(depth)}};

  // Level-k cells are shorter than b - a, so (a, b) holds an endpoint of one.
  int k = 1;
  while (!(Rat::pow2(1 - k) < b - a)) ++k;
  r.inputs["level"] = std::to_string(k);

  const Rat mid = (a + b) / Rat(2);
  Rat e = mid;
  const auto mid_level = first_exceptional_level(mid, k);
  if (!mid_level) {
    const Cell c = cell(locate(mid, k).front());
    e = a < c.lo ? c.lo : c.hi;
  }
  r.inputs["e"] = e.str();

  SearchOptions options;
  options.depth = std::max(depth, k + 1);
  const OscillationSearch s = scan_oscillation(e, min(e - a, b - e), options, true);
  const auto side = std::find_if(s.sides.begin(), s.sides.end(), [](const auto& d) { return d.complete(); });
  if (side == s.sides.end()) {
    r.diagnostic = "search budget exhausted";
    return finalize(r);
  }

  std::vector<Candidate> triple{Candidate{e, s.f0}, *side->high, *side->low};
  std::sort(triple.begin(), triple.end(), [](const auto& p, const auto& q) { return p.x < q.x; });
  const char* names[] = {"x1", "x2", "x3"};
  for (std::size_t i = 0; i < 3; ++i) {
    r.points.push_back(point(names[i], triple[i].x, Quantity::partial_sum, s.k));
    r.certificate.push_back({std::string(lvl("f", s.k + 1)) + "(" + names[i] + ") == 0",
                             eval_fk(triple[i].x, s.k + 1), Relation::eq, Rat(0)});
  }
  r.certificate.push_back({"a < x1", a, Relation::lt, triple[0].x});
  r.certificate.push_back({"x1 < x2", triple[0].x, Relation::lt, triple[1].x});
  r.certificate.push_back({"x2 < x3", triple[1].x, Relation::lt, triple[2].x});
  r.certificate.push_back({"x3 < b", triple[2].x, Relation::lt, b});
  r.certificate.push_back({"(f(x2) - f(x1)) (f(x3) - f(x2)) < 0",
                           (triple[1].f - triple[0].f) * (triple[2].f - triple[1].f), Relation::lt, Rat(0)});
  return finalize(r);
}

// ---------------------------------------------------------------------------
// Strict minimum of f at 0 from the right
// ---------------------------------------------------------------------------

WitnessReport local_min_check(const Rat& x) {
  if (!(x.sign() > 0 && x < Rat(1, 4))) throw DomainError("local_min_check: x must lie in (0, 1/4)");
  // Dyadic band (2^-(k+1), 2^-k]; closed on the right so that the strict
  // bounds also hold at band endpoints.
  int k = 2;
  while (x <= Rat::pow2(-(k + 1))) ++k;

  WitnessReport r;
  r.kind = WitnessKind::local_min;
  r.inputs = {{"x", x.str()}, {"k", std::to_string(k)}};
  r.points.push_back(point("x", x, Quantity::partial_sum, k));
  r.points.push_back(point("-x", -x, Quantity::partial_sum, k));

  const Rat sk = partial_sum(x, k);
  r.certificate.push_back({"2^-(k+1) < x", Rat::pow2(-(k + 1)), Relation::lt, x});
  r.certificate.push_back({"x <= 2^-k", x, Relation::le, Rat::pow2(-k)});
  for (int l = 1; l <= k; ++l) {
    r.certificate.push_back({lvl("f", l) + "(x) == 2^" + std::to_string(l) + " x", eval_fk(x, l), Relation::eq,
                             Rat::pow2(l) * x});
  }
  r.certificate.push_back({"S_k(x) > k / 2^(k+1)", sk, Relation::gt, Rat(k) * Rat::pow2(-(k + 1))});
  r.certificate.push_back({"S_k(x) - 2^-k > 0", sk - Rat::pow2(-k), Relation::gt, Rat(0)});
  r.certificate.push_back({"S_k(-x) == -S_k(x)", partial_sum(-x, k), Relation::eq, -sk});
  return finalize(r);
}

// ---------------------------------------------------------------------------
// Difference quotient of F_k at -1
// ---------------------------------------------------------------------------

WitnessReport quotient_bound_check(int k, long n, const Rat& x) {
  if (k < 1) throw WitnessError("quotient_bound: k must be positive");
  if (n < 2) throw WitnessError("quotient_bound: n must be at least 2");
  const Rat rn(n);
  const Rat band_lo = Rat(1) / (rn + Rat(1)) - Rat(1);
  const Rat band_hi = Rat(1) / rn - Rat(1);
  if (!(band_lo < x && x <= band_hi)) {
    throw WitnessError("quotient_bound: x = " + x.str() + " outside (" + band_lo.str() + ", " + band_hi.str() + "]");
  }
  WitnessReport r;
  r.kind = WitnessKind::quotient_bound;
  r.inputs = {{"k", std::to_string(k)}, {"n", std::to_string(n)}, {"x", x.str()}};
  r.points.push_back(point("x", x, Quantity::antiderivative, k));
  const Rat quotient = (eval_Fk(x, k) / (x + Rat(1))).abs();
  r.certificate.push_back({"|F_k(x) / (x + 1)| <= 1/n", quotient, Relation::le, Rat(1) / rn});
  return finalize(r);
}

// ---------------------------------------------------------------------------
// Cell structure
// ---------------------------------------------------------------------------

namespace {

using Span = std::pair<Rat, Rat>;

std::vector<Span> spans_of(const std::vector<Cell>& cells) {
  std::vector<Span> out;
  out.reserve(cells.size());
  for (const auto& c : cells) out.emplace_back(c.lo, c.hi);
  std::sort(out.begin(), out.end());
  return out;
}

template <typename T>
long mismatch_count(const std::set<T>& a, const std::set<T>& b) {
  std::vector<T> diff;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
  return static_cast<long>(diff.size());
}

}  // namespace

WitnessReport structure_check(int k, long index_budget) {
  if (k < 1) throw WitnessError("structure_check: level must be positive");
  if (index_budget < 0) throw WitnessError("structure_check: negative budget");
  const IndexBudget budget{index_budget, Truncation::per_coordinate};
  const std::vector<Cell> cells = enumerate_cells(k, budget);
  const std::vector<Cell> parents = k == 1 ? std::vector<Cell>{root_cell()} : enumerate_cells(k - 1, budget);

  long tiling = 0;
  long locate_bad = 0;
  long onto = 0;
  long affine = 0;
  long route = 0;
  std::set<Rat> lefts;
  std::set<Rat> rights;
  Rat longest;
  Rat total;

  for (const auto& c : cells) {
    total += c.length();
    longest = max(longest, c.length());

    const Rat at_lo = eval_fk(c.lo, k);
    const Rat at_hi = eval_fk(c.hi, k);
    if (at_lo.abs() != Rat(1) || at_hi != -at_lo || at_lo != c.map(c.lo) || !eval_fk(c.midpoint(), k).is_zero()) {
      ++onto;
    }
    for (const Rat& t : {Rat(1, 4), Rat(1, 2), Rat(3, 4)}) {
      const Rat p = c.lo + t * c.length();
      if (eval_fk(p, k) != c.map(p)) ++affine;
    }
    const auto at_mid = locate(c.midpoint(), k);
    const auto at_end = locate(c.lo, k);
    if (at_mid.size() != 1 || at_mid.front() != c.address ||
        std::find(at_end.begin(), at_end.end(), c.address) == at_end.end()) {
      ++locate_bad;
    }
    const Cell direct = cell(c.address);
    if (direct.lo != c.lo || direct.hi != c.hi || direct.map != c.map) ++route;
  }

  for (const auto& p : parents) {
    const auto kids = children(p, index_budget);
    if (kids.front().lo <= p.lo || kids.back().hi >= p.hi) ++tiling;
    for (std::size_t i = 0; i + 1 < kids.size(); ++i) {
      if (kids[i].hi != kids[i + 1].lo || !(kids[i].lo < kids[i].hi)) ++tiling;
    }
    const Rat margin = p.length() / Rat(2 * (index_budget + 2));
    for (const auto& c : kids) {
      for (const auto& [end, into] : {std::pair{&c.lo, &lefts}, std::pair{&c.hi, &rights}}) {
        if (*end - p.lo > margin && p.hi - *end > margin) into->insert(*end);
      }
    }
  }

  // E_k = {+-1} plus endpoints of cells of level < k; f_k vanishes on it.
  long e_bad = 0;
  std::set<Rat> e_next;
  const auto points = e_points(k, Window{}, budget);
  for (const auto& e : points) {
    if (first_exceptional_level(e.x, k) != e.first_level) ++e_bad;
    for (int l = e.first_level; l <= k; ++l) {
      if (!eval_fk(e.x, l).is_zero()) ++e_bad;
    }
    e_next.insert(e.x);
  }
  for (const auto& c : cells) {
    e_next.insert(c.lo);
    e_next.insert(c.hi);
  }
  std::set<Rat> e_following;
  for (const auto& e : e_points(k + 1, Window{}, budget)) e_following.insert(e.x);

  // Independent route: repeatedly apply child maps to the level-1 pattern.
  std::vector<Span> family;
  for (long j = -index_budget; j <= index_budget; ++j) {
    const Cell a = level1_cell(Level1Id(j));
    family.emplace_back(a.lo, a.hi);
  }
  for (int level = 2; level <= k; ++level) family = h_family_step(family, index_budget);
  std::sort(family.begin(), family.end());
  const std::vector<Span> preimage_family = spans_of(cells);
  const long h_bad = family == preimage_family ? 0 : 1 + std::labs(static_cast<long>(family.size()) -
                                                                   static_cast<long>(preimage_family.size()));

  const Rat keep = Rat(index_budget + 1) / Rat(index_budget + 2);
  Rat expected_total(2);
  for (int l = 0; l < k; ++l) expected_total *= keep;

  WitnessReport r;
  r.kind = WitnessKind::structure;
  r.inputs = {{"k", std::to_string(k)}, {"index_budget", std::to_string(index_budget)},
              {"cells", std::to_string(cells.size())}};
  r.certificate = {
      {"tiling violations", Rat(tiling), Relation::eq, Rat(0)},
      {"locate violations", Rat(locate_bad), Relation::eq, Rat(0)},
      {"onto [-1,1] violations", Rat(onto), Relation::eq, Rat(0)},
      {"affinity violations", Rat(affine), Relation::eq, Rat(0)},
      {"children vs cell() mismatches", Rat(route), Relation::eq, Rat(0)},
      {"left/right endpoint set mismatches", Rat(mismatch_count(lefts, rights)), Relation::eq, Rat(0)},
      {"E_k violations", Rat(e_bad), Relation::eq, Rat(0)},
      {"E_(k+1) = E_k + endpoints mismatches", Rat(mismatch_count(e_next, e_following)), Relation::eq, Rat(0)},
      {"h-family mismatches", Rat(h_bad), Relation::eq, Rat(0)},
      {"max cell length <= 2^(1-k)", longest, Relation::le, Rat::pow2(1 - k)},
      {"total length == 2 ((B+1)/(B+2))^k", total, Relation::eq, expected_total},
      {"total length >= 2 - eps", total, Relation::ge, Rat(2) - (Rat(2) - expected_total)},
  };
  return finalize(r);
}

// ---------------------------------------------------------------------------
// Integral cross-checks
// ---------------------------------------------------------------------------

WitnessReport integral_crosscheck(int k, const std::vector<Rat>& xs, long budget,
                                  const std::optional<Rat>& max_width) {
  WitnessReport r;
  r.kind = WitnessKind::integral_crosscheck;
  r.inputs = {{"k", std::to_string(k)}, {"budget", std::to_string(budget)}, {"samples", std::to_string(xs.size())}};
  if (max_width) r.inputs["max_width"] = max_width->str();
  for (const auto& x : xs) {
    const Enclosure e = enclose_integral(k, x, budget);
    const auto& p = r.points.emplace_back(point("x", x, Quantity::antiderivative, k));
    r.certificate.push_back({"lower <= F_k(" + x.str() + ")", e.lower, Relation::le, p.value});
    r.certificate.push_back({"F_k(" + x.str() + ") <= upper", p.value, Relation::le, e.upper});
    if (max_width) r.certificate.push_back({"width at " + x.str(), e.width(), Relation::le, *max_width});
  }
  return finalize(r);
}

WitnessReport darboux_check(int terms, long cells_budget, const std::optional<Rat>& max_width) {
  const Enclosure e = darboux_gap(terms, cells_budget);
  WitnessReport r;
  r.kind = WitnessKind::darboux;
  r.inputs = {{"K", std::to_string(terms)}, {"budget", std::to_string(cells_budget)},
              {"lower", e.lower.str()}, {"upper", e.upper.str()}};
  r.certificate.push_back({"lower <= 0", e.lower, Relation::le, Rat(0)});
  r.certificate.push_back({"0 <= upper", Rat(0), Relation::le, e.upper});
  if (max_width) r.certificate.push_back({"width <= max_width", e.width(), Relation::le, *max_width});
  return finalize(r);
}

}  // namespace nowhere
