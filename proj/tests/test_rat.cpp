#include "nowhere/rat.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <sstream>

using nowhere::BigInt;
using nowhere::ParseError;
using nowhere::Rat;

TEST(Rat, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(Rat::parse("3/4"), Rat(3, 4));
  EXPECT_EQ(Rat::parse("-6/8"), Rat(-3, 4));
  EXPECT_EQ(Rat::parse("+5"), Rat(5));
  EXPECT_EQ(Rat::parse("0.125"), Rat(1, 8));
  EXPECT_EQ(Rat::parse("-0.7"), Rat(-7, 10));
  EXPECT_EQ(Rat::parse(".5"), Rat(1, 2));
  EXPECT_EQ(Rat::parse("2."), Rat(2));
}

TEST(Rat, LeadingZerosAreDecimalNotOctal) {
  EXPECT_EQ(Rat::parse("010"), Rat(10));
  EXPECT_EQ(Rat::parse("0010/0100"), Rat(1, 10));
  EXPECT_EQ(Rat::parse("0.0125"), Rat(1, 80));
}

TEST(Rat, DecimalParseIsExact) {
  // 0.1 has no finite binary expansion; the parsed value must still be 1/10.
  const Rat tenth = Rat::parse("0.1");
  EXPECT_EQ(tenth * Rat(10), Rat(1));
  EXPECT_EQ(Rat::parse("0.333333333333333333333333"),
            Rat(BigInt("333333333333333333333333", 10), BigInt("1000000000000000000000000", 10)));
}

TEST(Rat, RejectsMalformedInput) {
  for (const char* bad : {"", "-", "1/0", "1/", "/2", "1.2.3", "abc", "1e5", "1/-2", " 1", "0x10", "."}) {
    EXPECT_THROW(Rat::parse(bad), ParseError) << bad;
  }
}

TEST(Rat, CanonicalString) {
  EXPECT_EQ(Rat(6, -4).str(), "-3/2");
  EXPECT_EQ(Rat(8, 4).str(), "2");
  EXPECT_EQ(Rat(0, 5).str(), "0");
  std::ostringstream s;
  s << Rat(-1, 3);
  EXPECT_EQ(s.str(), "-1/3");
}

TEST(Rat, FloorRoundsTowardMinusInfinity) {
  EXPECT_EQ(Rat(7, 2).floor(), BigInt(3));
  EXPECT_EQ(Rat(-7, 2).floor(), BigInt(-4));
  EXPECT_EQ(Rat(-4).floor(), BigInt(-4));
}

TEST(Rat, PowersOfTwo) {
  EXPECT_EQ(Rat::pow2(0), Rat(1));
  EXPECT_EQ(Rat::pow2(10), Rat(1024));
  EXPECT_EQ(Rat::pow2(-3), Rat(1, 8));
  EXPECT_EQ(Rat::pow2(-100) * Rat::pow2(100), Rat(1));
}

TEST(Rat, DivisionByZeroThrows) {
  EXPECT_THROW(Rat(1) / Rat(0), std::domain_error);
  EXPECT_THROW(Rat(1, 0), std::domain_error);
}

TEST(RatProperty, FieldIdentitiesOnRandomValues) {
  oracle::Gen gen(11);
  for (int i = 0; i < 500; ++i) {
    const Rat a = gen.closed(Rat(-1000), Rat(1000), 5000);
    const Rat b = gen.closed(Rat(-1000), Rat(1000), 5000);
    EXPECT_EQ((a + b) - b, a);
    EXPECT_EQ(a * b, b * a);
    if (!b.is_zero()) EXPECT_EQ(a / b * b, a);
    EXPECT_EQ(a < b, b > a);
    EXPECT_EQ(Rat::parse(a.str()), a);
    EXPECT_LE(Rat(a.floor()), a);
    EXPECT_GT(Rat(a.floor()) + Rat(1), a);
    EXPECT_EQ(a.abs() >= a, true);
  }
}
