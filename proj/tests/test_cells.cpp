#include "nowhere/cells.hpp"

#include "nowhere/construction.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace nowhere;

namespace {

IndexBudget box(long b) { return IndexBudget{b, Truncation::per_coordinate}; }

}  // namespace

TEST(Level1Cells, Shapes) {
  const Cell mid = level1_cell(Level1Id(0L));
  EXPECT_EQ(mid.lo, Rat(-1, 2));
  EXPECT_EQ(mid.hi, Rat(1, 2));
  EXPECT_EQ(mid.map, (Affine{Rat(2), Rat(0)}));

  const Cell c1 = level1_cell(Level1Id(1L));  // [1/2, 2/3], from 1 down to -1
  EXPECT_EQ(c1.lo, Rat(1, 2));
  EXPECT_EQ(c1.hi, Rat(2, 3));
  EXPECT_EQ(c1.map(c1.lo), Rat(1));
  EXPECT_EQ(c1.map(c1.hi), Rat(-1));
  EXPECT_EQ(c1.map.slope, Rat(-12));

  const Cell m1 = level1_cell(Level1Id(-1L));
  EXPECT_EQ(m1.lo, Rat(-2, 3));
  EXPECT_EQ(m1.hi, Rat(-1, 2));
  EXPECT_EQ(m1.map.slope, c1.map.slope);
  EXPECT_EQ(m1.map.intercept, -c1.map.intercept);
}

TEST(Level1Cells, AgreeWithF1OnRandomPoints) {
  oracle::Gen gen(21);
  for (long j = -30; j <= 30; ++j) {
    const Cell c = level1_cell(Level1Id(j));
    for (int i = 0; i < 5; ++i) {
      const Rat x = gen.closed(c.lo, c.hi, 1000);
      EXPECT_EQ(c.map(x), oracle::f1(x)) << "j=" << j << " x=" << x;
    }
  }
}

TEST(MiddleCells, LawUpToLevel20) {
  Address address;
  for (int k = 1; k <= 20; ++k) {
    address = address.child(Level1Id(0L));
    const Cell c = cell(address);
    EXPECT_EQ(c.lo, -Rat::pow2(-k));
    EXPECT_EQ(c.hi, Rat::pow2(-k));
    EXPECT_EQ(c.map.slope, Rat::pow2(k));
    EXPECT_EQ(c.map.intercept, Rat(0));
  }
}

TEST(Cells, KnownLevel2Cell) {
  // Inside [1/2, 2/3] the middle of the image [-1/2, 1/2] pulls back to [13/24, 5/8].
  const Cell c = cell(Address{1, 0});
  EXPECT_EQ(c.lo, Rat(13, 24));
  EXPECT_EQ(c.hi, Rat(5, 8));
  EXPECT_EQ(c.map.slope, Rat(-24));
  EXPECT_THROW(cell(Address{}), std::invalid_argument);
}

TEST(Locate, EndpointsBelongToBothNeighbours) {
  EXPECT_EQ(locate_level1(Rat(1, 2)), (std::vector<Level1Id>{0L, 1L}));
  EXPECT_EQ(locate_level1(Rat(-1, 2)), (std::vector<Level1Id>{-1L, 0L}));
  EXPECT_EQ(locate_level1(Rat(2, 3)), (std::vector<Level1Id>{1L, 2L}));
  EXPECT_EQ(locate_level1(Rat(7, 10)), (std::vector<Level1Id>{2L}));
  EXPECT_TRUE(locate_level1(Rat(1)).empty());
  EXPECT_EQ(locate(Rat(1, 2), 1).size(), 2u);
}

TEST(CellsProperty, EveryCellIsAffineOntoUnitInterval) {
  oracle::Gen gen(22);
  for (int i = 0; i < 200; ++i) {
    const int k = static_cast<int>(gen.integer(1, 4));
    Address address;
    for (int l = 0; l < k; ++l) address = address.child(Level1Id(gen.integer(-25, 25)));
    const Cell c = cell(address);
    ASSERT_LT(c.lo, c.hi);
    EXPECT_LE(c.length(), Rat::pow2(1 - k));
    // Onto [-1, 1] with opposite signs at the two ends.
    EXPECT_EQ(oracle::fk(c.lo, k).abs(), Rat(1));
    EXPECT_EQ(oracle::fk(c.hi, k), -oracle::fk(c.lo, k));
    for (int s = 0; s < 3; ++s) {
      const Rat x = gen.closed(c.lo, c.hi, 500);
      EXPECT_EQ(c.map(x), oracle::fk(x, k)) << address.str() << " at " << x;
    }
    const auto found = locate(c.midpoint(), k);
    ASSERT_EQ(found.size(), 1u);
    EXPECT_EQ(found.front(), address);
  }
}

TEST(CellsProperty, LocateFindsAllContainingCells) {
  oracle::Gen gen(23);
  for (int i = 0; i < 200; ++i) {
    const Rat x = gen.open(Rat(-1), Rat(1), 300);
    const int k = static_cast<int>(gen.integer(1, 3));
    const auto found = locate(x, k);
    // Points sent to +-1 before level k are limits of level-k cells, not members.
    bool early = false;
    for (int l = 1; l < k; ++l) early = early || oracle::fk(x, l).abs() == Rat(1);
    EXPECT_EQ(found.empty(), early) << x;
    for (const auto& a : found) EXPECT_TRUE(cell(a).contains(x));
    EXPECT_TRUE(std::is_sorted(found.begin(), found.end()));
  }
}

TEST(Children, TileTheCoveredPartOfTheParent) {
  for (const Address& parent : {Address{}, Address{3}, Address{-2, 1}, Address{0, 0}}) {
    const Cell p = parent.empty() ? root_cell() : cell(parent);
    const long b = 7;
    const auto kids = children(p, b);
    ASSERT_EQ(kids.size(), static_cast<std::size_t>(2 * b + 1));
    const Rat margin = p.length() / Rat(2 * (b + 2));
    EXPECT_EQ(kids.front().lo, p.lo + margin);
    EXPECT_EQ(kids.back().hi, p.hi - margin);
    for (std::size_t i = 0; i + 1 < kids.size(); ++i) EXPECT_EQ(kids[i].hi, kids[i + 1].lo);
    for (const auto& c : kids) {
      const Cell direct = cell(c.address);
      EXPECT_EQ(direct.lo, c.lo);
      EXPECT_EQ(direct.hi, c.hi);
      EXPECT_EQ(direct.map, c.map);
    }
  }
}

TEST(Enumeration, CountsAndTotalLength) {
  for (long b : {0L, 1L, 4L, 10L}) {
    for (int k = 1; k <= 2; ++k) {
      const auto cells = enumerate_cells(k, box(b));
      long expected = 1;
      for (int l = 0; l < k; ++l) expected *= 2 * b + 1;
      EXPECT_EQ(static_cast<long>(cells.size()), expected);
      Rat total;
      for (const auto& c : cells) total += c.length();
      Rat keep(1);
      for (int l = 0; l < k; ++l) keep *= Rat(b + 1, b + 2);
      EXPECT_EQ(total, Rat(2) * keep);
      for (std::size_t i = 0; i + 1 < cells.size(); ++i) EXPECT_LE(cells[i].hi, cells[i + 1].lo);
    }
  }
  // Level 1, budget 10: the gaps near +-1 have length 1/12 each.
  Rat total;
  for (const auto& c : enumerate_cells(1, box(10))) total += c.length();
  EXPECT_EQ(total, Rat(2) - Rat(2, 12));
}

TEST(Enumeration, WindowFilters) {
  const Window w{Rat(1, 2), Rat(3, 4)};
  const auto cells = enumerate_cells(2, box(5), w);
  ASSERT_FALSE(cells.empty());
  for (const auto& c : cells) EXPECT_TRUE(w.meets(c.lo, c.hi));
  std::size_t expected = 0;
  for (const auto& c : enumerate_cells(2, box(5))) expected += w.meets(c.lo, c.hi) ? 1 : 0;
  EXPECT_EQ(cells.size(), expected);
}

TEST(Enumeration, HyperbolicBudget) {
  // Level 1 matches the box; deeper levels keep prod (|j|+1) <= B + 1.
  const IndexBudget hyper{20, Truncation::hyperbolic};
  EXPECT_EQ(enumerate_cells(1, hyper).size(), enumerate_cells(1, box(20)).size());
  for (const auto& c : enumerate_cells(3, hyper)) {
    long weight = 1;
    for (const auto& id : c.address.ids) weight *= std::labs(id.j.get_si()) + 1;
    EXPECT_LE(weight, 21);
  }
  long count = 0;
  for (long a = -20; a <= 20; ++a) {
    for (long b = -20; b <= 20; ++b) {
      if ((std::labs(a) + 1) * (std::labs(b) + 1) <= 21) ++count;
    }
  }
  EXPECT_EQ(static_cast<long>(enumerate_cells(2, hyper).size()), count);
}

TEST(EPoints, FirstLevelsAndVanishing) {
  const auto level1 = e_points(1, Window{}, 5);
  ASSERT_EQ(level1.size(), 2u);
  EXPECT_EQ(level1.front(), (EPoint{Rat(-1), 1}));
  EXPECT_EQ(level1.back(), (EPoint{Rat(1), 1}));

  const auto level3 = e_points(3, Window{}, 4);
  for (const auto& e : level3) {
    EXPECT_TRUE(oracle::fk(e.x, e.first_level).is_zero()) << e.x;
    if (e.first_level > 1) EXPECT_EQ(oracle::fk(e.x, e.first_level - 1).abs(), Rat(1)) << e.x;
  }
  const auto has = [&](const Rat& x, int level) {
    return std::find(level3.begin(), level3.end(), EPoint{x, level}) != level3.end();
  };
  EXPECT_TRUE(has(Rat(1, 2), 2));
  EXPECT_TRUE(has(Rat(-2, 3), 2));
  EXPECT_TRUE(has(Rat(5, 8), 3));
}

TEST(EPoints, GrowWithLevel) {
  std::set<Rat> previous;
  for (int k = 1; k <= 3; ++k) {
    std::set<Rat> current;
    for (const auto& e : e_points(k, Window{}, 3)) current.insert(e.x);
    EXPECT_TRUE(std::includes(current.begin(), current.end(), previous.begin(), previous.end()));
    previous = current;
  }
}

TEST(HFamily, EqualsPreimageFamily) {
  for (long b = 0; b <= 6; ++b) {
    std::vector<std::pair<Rat, Rat>> family;
    for (long j = -b; j <= b; ++j) {
      const Cell a = level1_cell(Level1Id(j));
      family.emplace_back(a.lo, a.hi);
    }
    for (int k = 2; k <= 3; ++k) {
      family = h_family_step(family, b);
      auto sorted = family;
      std::sort(sorted.begin(), sorted.end());
      std::vector<std::pair<Rat, Rat>> cells;
      for (const auto& c : enumerate_cells(k, box(b))) cells.emplace_back(c.lo, c.hi);
      std::sort(cells.begin(), cells.end());
      EXPECT_EQ(sorted, cells) << "b=" << b << " k=" << k;
    }
  }
}
