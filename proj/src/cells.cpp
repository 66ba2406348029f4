#include "nowhere/cells.hpp"

#include "nowhere/construction.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace nowhere {

Address::Address(std::initializer_list<long> js) {
  ids.reserve(js.size());
  for (long j : js) ids.emplace_back(j);
}

Address Address::child(const Level1Id& j) const {
  Address out = *this;
  out.ids.push_back(j);
  return out;
}

std::string Address::str() const {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ';';
    out += ids[i].j.get_str();
  }
  return out;
}

std::strong_ordering operator<=>(const Address& a, const Address& b) {
  return std::lexicographical_compare_three_way(a.ids.begin(), a.ids.end(), b.ids.begin(),
                                                b.ids.end());
}

Cell root_cell() { return Cell{Address{}, Rat(-1), Rat(1), Affine{}}; }

Cell level1_cell(const Level1Id& id) {
  const int s = sign_of(id.j);
  if (s == 0) return Cell{Address(std::vector<Level1Id>{id}), Rat(-1, 2), Rat(1, 2), Affine{Rat(2), Rat(0)}};

  // Right-hand cell [1 - 1/n, 1 - 1/(n+1)], n = |j| + 1, where
  // f_1 runs linearly from (-1)^n to (-1)^(n+1).
  const BigInt n = BigInt(::abs(id.j)) + 1;
  const Rat rn(n);
  const Rat lo = Rat(1) - Rat(1) / rn;
  const Rat hi = Rat(1) - Rat(1) / (rn + Rat(1));
  const bool n_odd = mpz_odd_p(n.get_mpz_t()) != 0;
  const Rat start = n_odd ? Rat(-1) : Rat(1);
  const Rat slope = Rat(-2) * start * rn * (rn + Rat(1));
  const Rat intercept = start - slope * lo;
  if (s > 0) return Cell{Address(std::vector<Level1Id>{id}), lo, hi, Affine{slope, intercept}};
  // Odd extension: same slope, negated intercept, mirrored interval.
  return Cell{Address(std::vector<Level1Id>{id}), -hi, -lo, Affine{slope, -intercept}};
}

Affine child_map(const Cell& parent) {
  const Rat half_len = parent.length() / Rat(2);
  return Affine{half_len, half_len + parent.lo};
}

Cell cell(const Address& address) {
  if (address.empty()) throw std::invalid_argument("cell: empty address");
  const auto& ids = address.ids;
  Cell tail = level1_cell(ids.back());
  Rat lo = tail.lo;
  Rat hi = tail.hi;
  Affine map = tail.map;
  for (std::size_t i = ids.size() - 1; i-- > 0;) {
    const Cell step = level1_cell(ids[i]);
    Rat a = step.map.solve(lo);
    Rat b = step.map.solve(hi);
    if (b < a) std::swap(a, b);
    lo = std::move(a);
    hi = std::move(b);
    map = map.after(step.map);
  }
  return Cell{address, std::move(lo), std::move(hi), std::move(map)};
}

std::vector<Level1Id> locate_level1(const Rat& y) {
  require_unit_interval(y, "locate");
  if (y.abs() == Rat(1)) return {};
  if (y.sign() < 0) {
    auto mirrored = locate_level1(-y);
    for (auto& id : mirrored) id.j = -id.j;
    std::sort(mirrored.begin(), mirrored.end());
    return mirrored;
  }
  const Rat half(1, 2);
  if (y < half) return {Level1Id(0L)};
  if (y == half) return {Level1Id(0L), Level1Id(1L)};
  const BigInt n = (Rat(1) / (Rat(1) - y)).floor();
  const Level1Id own(BigInt(n - 1));
  if (y == Rat(1) - Rat(1) / Rat(n)) return {Level1Id(BigInt(n - 2)), own};
  return {own};
}

namespace {

void locate_into(const Rat& x, int k, Address& prefix, std::vector<Address>& out) {
  for (const auto& id : locate_level1(x)) {
    prefix.ids.push_back(id);
    if (k == 1) {
      out.push_back(prefix);
    } else {
      const Cell c = level1_cell(id);
      locate_into(c.map(x), k - 1, prefix, out);
    }
    prefix.ids.pop_back();
  }
}

}  // namespace

std::vector<Address> locate(const Rat& x, int k) {
  require_unit_interval(x, "locate");
  if (k < 1) throw std::invalid_argument("locate: level must be positive");
  std::vector<Address> out;
  Address prefix;
  locate_into(x, k, prefix, out);
  return out;
}

std::vector<Cell> children(const Cell& parent, long budget) {
  if (budget < 0) throw std::invalid_argument("children: negative budget");
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(2 * budget + 1));
  for (long j = -budget; j <= budget; ++j) {
    const Cell a = level1_cell(Level1Id(j));
    Rat lo = parent.map.solve(a.lo);
    Rat hi = parent.map.solve(a.hi);
    if (hi < lo) std::swap(lo, hi);
    out.push_back(Cell{parent.address.child(Level1Id(j)), std::move(lo), std::move(hi),
                       a.map.after(parent.map)});
  }
  if (parent.map.slope.sign() < 0) std::reverse(out.begin(), out.end());
  return out;
}

std::vector<Cell> children(const Address& parent, long budget) {
  return children(parent.empty() ? root_cell() : cell(parent), budget);
}

namespace {

long coordinate_cap(const IndexBudget& budget, long remaining) {
  return budget.shape == Truncation::per_coordinate ? budget.limit : remaining - 1;
}

void visit_below(const Cell& parent, int max_level, const IndexBudget& budget, long remaining,
                 const std::optional<Window>& window, const std::function<void(const Cell&)>& visit) {
  const long cap = coordinate_cap(budget, remaining);
  if (cap < 0) return;
  for (const Cell& c : children(parent, cap)) {
    if (window && !window->meets(c.lo, c.hi)) continue;
    visit(c);
    if (c.level() < max_level) {
      long next = remaining;
      if (budget.shape == Truncation::hyperbolic) {
        const long weight = std::labs(c.address.ids.back().j.get_si()) + 1;
        next = remaining / weight;
      }
      visit_below(c, max_level, budget, next, window, visit);
    }
  }
}

}  // namespace

void for_each_cell(int max_level, const IndexBudget& budget, const std::optional<Window>& window,
                   const std::function<void(const Cell&)>& visit) {
  if (max_level < 1) return;
  if (budget.limit < 0) throw std::invalid_argument("index budget must be nonnegative");
  visit_below(root_cell(), max_level, budget, budget.limit + 1, window, visit);
}

std::vector<Cell> enumerate_cells(int k, const IndexBudget& budget,
                                  const std::optional<Window>& window) {
  std::vector<Cell> out;
  for_each_cell(k, budget, window, [&](const Cell& c) {
    if (c.level() == k) out.push_back(c);
  });
  return out;
}

std::vector<EPoint> e_points(int k, const Window& window, const IndexBudget& budget) {
  if (k < 1) throw std::invalid_argument("e_points: level must be positive");
  std::map<Rat, int> found;
  for (const Rat& end : {Rat(-1), Rat(1)}) {
    if (window.contains(end)) found.emplace(end, 1);
  }
  for_each_cell(k - 1, budget, window, [&](const Cell& c) {
    for (const Rat* end : {&c.lo, &c.hi}) {
      if (!window.contains(*end)) continue;
      auto [it, inserted] = found.emplace(*end, c.level() + 1);
      if (!inserted) it->second = std::min(it->second, c.level() + 1);
    }
  });
  std::vector<EPoint> out;
  out.reserve(found.size());
  for (auto& [x, level] : found) out.push_back(EPoint{x, level});
  return out;
}

std::vector<EPoint> e_points(int k, const Window& window, long budget) {
  return e_points(k, window, IndexBudget{budget, Truncation::per_coordinate});
}

std::vector<std::pair<Rat, Rat>> h_family_step(const std::vector<std::pair<Rat, Rat>>& family,
                                               long budget) {
  std::vector<std::pair<Rat, Rat>> out;
  out.reserve(family.size() * static_cast<std::size_t>(2 * budget + 1));
  for (const auto& [a, b] : family) {
    const Affine h = child_map(Cell{Address{}, a, b, Affine{}});
    for (long j = -budget; j <= budget; ++j) {
      const Cell base = level1_cell(Level1Id(j));
      out.emplace_back(h(base.lo), h(base.hi));
    }
  }
  return out;
}

}  // namespace nowhere
