#pragma once

/// @file cells.hpp
/// @brief The maximal linearity intervals of the iterates f_k.
///
/// A level-k cell is addressed by a sequence (j_1, ..., j_k) of signed level-1
/// indices. Level-1 cells are A_0 = [-1/2, 1/2], A_j = [1 - 1/(j+1), 1 - 1/(j+2)]
/// for j >= 1 and their mirror images for j <= -1. Deeper cells are pulled back
/// through the affine restriction of f_1:
///
///   Cell(j_1, ..., j_k) = (f_1 restricted to A_{j_1})^{-1}(Cell(j_2, ..., j_k)).
///
/// f_k is affine on every cell and maps it onto [-1, 1]. Infinite families are
/// only ever exposed through an explicit index budget.

#include "nowhere/rat.hpp"

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace nowhere {

/// x -> slope * x + intercept.
struct Affine {
  Rat slope{1};
  Rat intercept{0};

  Rat operator()(const Rat& x) const { return slope * x + intercept; }
  /// The unique x with (*this)(x) == y.
  Rat solve(const Rat& y) const { return (y - intercept) / slope; }
  /// (*this) o inner.
  Affine after(const Affine& inner) const {
    return {slope * inner.slope, slope * inner.intercept + intercept};
  }

  friend bool operator==(const Affine&, const Affine&) = default;
};

struct Level1Id {
  BigInt j;

  Level1Id() = default;
  Level1Id(long v) : j(v) {}  // NOLINT(google-explicit-constructor)
  explicit Level1Id(BigInt v) : j(std::move(v)) {}

  friend bool operator==(const Level1Id& a, const Level1Id& b) { return a.j == b.j; }
  friend std::strong_ordering operator<=>(const Level1Id& a, const Level1Id& b) {
    return compare(a.j, b.j);
  }
};

struct Address {
  std::vector<Level1Id> ids;

  Address() = default;
  Address(std::initializer_list<long> js);
  explicit Address(std::vector<Level1Id> v) : ids(std::move(v)) {}

  int level() const { return static_cast<int>(ids.size()); }
  bool empty() const { return ids.empty(); }
  Address child(const Level1Id& j) const;
  /// "j1;j2;...;jk".
  std::string str() const;

  friend bool operator==(const Address&, const Address&) = default;
  friend std::strong_ordering operator<=>(const Address& a, const Address& b);
};

/// A closed interval [lo, hi] with f_k(x) = map(x) on it, k = address.level().
/// The empty address denotes the virtual root [-1, 1] with the identity map.
struct Cell {
  Address address;
  Rat lo;
  Rat hi;
  Affine map;

  int level() const { return address.level(); }
  Rat length() const { return hi - lo; }
  Rat midpoint() const { return (lo + hi) / Rat(2); }
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
};

struct Window {
  Rat lo{-1};
  Rat hi{1};

  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
  bool meets(const Rat& a, const Rat& b) const { return a <= hi && lo <= b; }
};

/// How an index budget B truncates the infinite family of addresses.
enum class Truncation {
  per_coordinate,  // |j_i| <= B for every coordinate
  hyperbolic,      // prod (|j_i| + 1) <= B + 1
};

struct IndexBudget {
  long limit = 1;
  Truncation shape = Truncation::per_coordinate;
};

/// A point of the exceptional set E_k together with the least k containing it.
struct EPoint {
  Rat x;
  int first_level = 1;

  friend bool operator==(const EPoint&, const EPoint&) = default;
};

Cell root_cell();

Cell level1_cell(const Level1Id& j);

/// The orientation-preserving map h with h(-1) = parent.lo, h(1) = parent.hi.
Affine child_map(const Cell& parent);

Cell cell(const Address& address);

/// Level-1 indices whose cell contains y, in increasing order (0, 1 or 2 of them).
std::vector<Level1Id> locate_level1(const Rat& y);

/// All level-k addresses whose cell contains x, in address order.
std::vector<Address> locate(const Rat& x, int k);

/// Level-(k+1) sub-cells with child index |j| <= budget, in increasing spatial order.
std::vector<Cell> children(const Cell& parent, long budget);
std::vector<Cell> children(const Address& parent, long budget);

/// Depth-first visit of every cell of level 1..max_level admitted by the budget
/// and meeting the window (when given). Children are visited in spatial order.
void for_each_cell(int max_level, const IndexBudget& budget, const std::optional<Window>& window,
                   const std::function<void(const Cell&)>& visit);

/// Level-k cells admitted by the budget, in spatial order.
std::vector<Cell> enumerate_cells(int k, const IndexBudget& budget,
                                  const std::optional<Window>& window = std::nullopt);

/// Truncated E_k within the window: +-1 plus endpoints of admitted cells of level < k,
/// each tagged with its first level; sorted by x.
std::vector<EPoint> e_points(int k, const Window& window, const IndexBudget& budget);
std::vector<EPoint> e_points(int k, const Window& window, long budget);

/// The family at level k+1 built from `family` (level k) by applying
/// the child map of each member to the admitted level-1 cells. Used as an
/// independent route to the same cells.
std::vector<std::pair<Rat, Rat>> h_family_step(const std::vector<std::pair<Rat, Rat>>& family,
                                               long budget);

}  // namespace nowhere
