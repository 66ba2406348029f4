#include "nowhere/construction.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace nowhere;

TEST(F1, SpotValues) {
  EXPECT_EQ(eval_f1(Rat(1, 2)), Rat(1));
  EXPECT_EQ(eval_f1(Rat(1)), Rat(0));
  EXPECT_EQ(eval_f1(Rat(-1)), Rat(0));
  EXPECT_EQ(eval_f1(Rat(0)), Rat(0));
  EXPECT_EQ(eval_f1(Rat(7, 10)), Rat(-1, 5));
  EXPECT_EQ(eval_f1(Rat(1, 4)), Rat(1, 2));
  EXPECT_EQ(eval_f1(Rat(2, 3)), Rat(-1));
  EXPECT_EQ(eval_f1(Rat(3, 4)), Rat(1));
}

TEST(F1, RejectsPointsOutsideUnitInterval) {
  EXPECT_THROW(eval_f1(Rat(3, 2)), DomainError);
  EXPECT_THROW(eval_f1(Rat(-101, 100)), DomainError);
  EXPECT_THROW(eval_f(Rat(2)), DomainError);
}

TEST(F1, NodeValuesAlternate) {
  for (long n = 2; n <= 60; ++n) {
    const Rat node = Rat(1) - Rat(1, n);
    const Rat expected = n % 2 == 0 ? Rat(1) : Rat(-1);
    EXPECT_EQ(eval_f1(node), expected) << n;
    EXPECT_EQ(eval_f1(-node), -expected) << n;
  }
}

TEST(F1Property, MatchesInterpolatedNodesAndIsOdd) {
  oracle::Gen gen(1);
  for (int i = 0; i < 2000; ++i) {
    const Rat x = gen.closed(Rat(-1), Rat(1), 20000);
    EXPECT_EQ(eval_f1(x), oracle::f1(x)) << x;
    EXPECT_EQ(eval_f1(-x), -eval_f1(x)) << x;
    EXPECT_LE(eval_f1(x).abs(), Rat(1));
  }
}

TEST(F1Property, ContinuousAtEveryNode) {
  // The two affine pieces meeting at 1 - 1/n agree there.
  for (long n = 2; n <= 200; ++n) {
    const Rat node = Rat(1) - Rat(1, n);
    const Rat eps(1, 1000000000);
    const Rat left = eval_f1(node - eps);
    const Rat right = eval_f1(node + eps);
    const Rat bound = Rat(2 * (n + 1) * (n + 2)) * eps;
    EXPECT_LE((left - eval_f1(node)).abs(), bound);
    EXPECT_LE((right - eval_f1(node)).abs(), bound);
  }
}

TEST(Iterates, MiddleCellDoublesExactly) {
  for (int l = 1; l <= 20; ++l) {
    const Rat x = Rat::pow2(-l - 1) * Rat(3, 4);
    EXPECT_EQ(eval_fk(x, l), Rat::pow2(l) * x);
  }
}

TEST(IteratesProperty, CompositionMatchesOracle) {
  oracle::Gen gen(2);
  for (int i = 0; i < 300; ++i) {
    const Rat x = gen.closed(Rat(-1), Rat(1), 1000);
    const int k = static_cast<int>(gen.integer(1, 6));
    EXPECT_EQ(eval_fk(x, k), oracle::fk(x, k)) << x << " k=" << k;
    EXPECT_EQ(partial_sum(x, k), oracle::partial_sum(x, k)) << x;
  }
}

TEST(Orbit, AbsorptionAndIterates) {
  const OrbitInfo half = orbit(Rat(1, 2), 10);
  ASSERT_TRUE(half.absorbed());
  EXPECT_EQ(*half.absorbed_step, 1);
  EXPECT_EQ(*half.absorber, 1);
  EXPECT_TRUE(half.absorbed_at_unit());
  EXPECT_EQ(half.iterate(1), Rat(1));
  EXPECT_EQ(half.iterate(2), Rat(0));
  EXPECT_EQ(half.iterate(7), Rat(0));

  const OrbitInfo zero = orbit(Rat(0), 5);
  EXPECT_TRUE(zero.absorbed());
  EXPECT_FALSE(zero.absorbed_at_unit());

  const OrbitInfo third = orbit(Rat(1, 3), 8);  // 1/3 -> 2/3 -> -1
  ASSERT_TRUE(third.absorbed_at_unit());
  EXPECT_EQ(*third.absorbed_step, 2);
  EXPECT_EQ(*third.absorber, -1);
}

TEST(SeriesF, ExactOnAbsorbedOrbits) {
  const Certified quarter = eval_f(Rat(1, 4), 30);
  EXPECT_EQ(quarter.center, Rat(1, 2));
  EXPECT_TRUE(quarter.exact());
  // 1/2 -> 1 -> 0: f(1/2) = 1/2.
  EXPECT_EQ(eval_f(Rat(1, 2)), (Certified{Rat(1, 2), Rat(0)}));
  EXPECT_EQ(eval_f(Rat(1)), (Certified{Rat(0), Rat(0)}));
  EXPECT_EQ(eval_f(Rat(0)), (Certified{Rat(0), Rat(0)}));
}

TEST(SeriesF, TruncatedRadiusOtherwise) {
  const Rat x(1, 7);
  const Certified v = eval_f(x, 12);
  EXPECT_EQ(v.radius, Rat::pow2(-12));
  EXPECT_EQ(v.center, oracle::partial_sum(x, 12));
  const Certified finer = eval_f(x, 24);
  // Nested enclosures.
  EXPECT_LE(v.lower(), finer.lower());
  EXPECT_GE(v.upper(), finer.upper());
}

TEST(SeriesFProperty, OddAndBoundedByOne) {
  oracle::Gen gen(3);
  for (int i = 0; i < 200; ++i) {
    const Rat x = gen.closed(Rat(-1), Rat(1), 5000);
    const Certified a = eval_f(x, 16);
    const Certified b = eval_f(-x, 16);
    EXPECT_EQ(a.center, -b.center);
    EXPECT_EQ(a.radius, b.radius);
    EXPECT_LE(a.center.abs(), Rat(1));
  }
}

TEST(SeriesG, EvenInCenter) {
  oracle::Gen gen(4);
  for (int i = 0; i < 100; ++i) {
    const Rat x = gen.open(Rat(0), Rat(1), 5000);
    EXPECT_EQ(eval_g(x, 20).center, eval_g(-x, 20).center);
  }
  EXPECT_EQ(eval_g(Rat(0)), (Certified{Rat(0), Rat(0)}));
}
