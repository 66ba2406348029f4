#include "nowhere/suites.hpp"

#include "nowhere/report_json.hpp"

#include <gtest/gtest.h>

using namespace nowhere;

TEST(Sampler, StaysInsideOpenInterval) {
  RationalSampler sampler(5);
  for (int i = 0; i < 2000; ++i) {
    const Rat lo(-3, 7);
    const Rat hi(1, 5);
    const Rat x = sampler.open_interval(lo, hi, 1000);
    EXPECT_LT(lo, x);
    EXPECT_LT(x, hi);
    EXPECT_LE(x.den(), BigInt(1000));
  }
  EXPECT_THROW(sampler.open_interval(Rat(0), Rat(1, 1000), 1000), std::invalid_argument);
  EXPECT_THROW(sampler.open_interval(Rat(1), Rat(0), 1000), std::invalid_argument);
}

TEST(Sampler, SameSeedSameStream) {
  RationalSampler a(99);
  RationalSampler b(99);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.open_interval(Rat(-1), Rat(1), 1000000), b.open_interval(Rat(-1), Rat(1), 1000000));
}

TEST(Suites, NamesAndUnknown) {
  EXPECT_EQ(suite_names().size(), 9u);
  EXPECT_EQ(suite_names().back(), "all");
  EXPECT_THROW(run_suite("nope"), UnknownSuite);
}

TEST(Suites, SmallRunsPass) {
  SuiteConfig config;
  config.count = 10;
  for (const char* name : {"local-min", "no-extrema", "nowhere-monotone"}) {
    const SuiteReport r = run_suite(name, config);
    EXPECT_TRUE(r.all_passed()) << name;
    EXPECT_GE(r.cases.size(), 10u) << name;
  }
  SuiteConfig levels;
  levels.k = 3;
  levels.budget = 6;
  const SuiteReport osc = run_suite("oscillation", levels);
  EXPECT_TRUE(osc.all_passed());
  EXPECT_EQ(osc.parameters.at("truncation"), "hyperbolic");
}

TEST(Suites, QuotientBoundSingleLevel) {
  SuiteConfig config;
  config.k = 3;
  config.n_max = 50;
  const SuiteReport r = run_suite("quotient-bound", config);
  EXPECT_TRUE(r.all_passed());
  EXPECT_EQ(r.cases.size(), 49u * 4u);
  for (const auto& c : r.cases) EXPECT_EQ(c.inputs.at("k"), "3");
}

TEST(Suites, DarbouxWidthOnlyWhenAsked) {
  EXPECT_TRUE(run_suite("darboux").all_passed());
  SuiteConfig config;
  config.max_width = Rat::pow2(-7);
  const SuiteReport r = run_suite("darboux", config);
  EXPECT_FALSE(r.all_passed());
  EXPECT_EQ(r.parameters.at("max_width"), "1/128");
}

TEST(Suites, DeterministicForFixedSeed) {
  SuiteConfig config;
  config.count = 15;
  config.seed = 7;
  const auto a = to_json(run_suite("no-extrema", config)).dump();
  const auto b = to_json(run_suite("no-extrema", config)).dump();
  EXPECT_EQ(a, b);
  config.seed = 8;
  EXPECT_NE(to_json(run_suite("no-extrema", config)).dump(), a);
}

TEST(Suites, ReportSchema) {
  SuiteConfig config;
  config.count = 3;
  const auto j = to_json(run_suite("local-min", config));
  EXPECT_EQ(j.at("suite"), "local-min");
  EXPECT_EQ(j.at("seed"), kDefaultSeed);
  EXPECT_EQ(j.at("summary").at("pass"), 3);
  EXPECT_EQ(j.at("summary").at("fail"), 0);
  ASSERT_EQ(j.at("cases").size(), 3u);
  for (const auto& c : j.at("cases")) {
    EXPECT_TRUE(c.contains("inputs"));
    EXPECT_EQ(c.at("verdict"), "pass");
    EXPECT_FALSE(c.at("certificate").empty());
    EXPECT_TRUE(recheck(witness_from_json(c)));
  }
}
