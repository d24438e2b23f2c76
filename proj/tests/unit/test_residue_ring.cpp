#include <gtest/gtest.h>

#include "expect_error.hpp"
#include "gen.hpp"
#include "naks/residue_ring.hpp"
#include "oracles.hpp"

using namespace naks;

namespace {

oracle::RingSpec spec_of(const Ring& r) { return {r.family() == Family::series, r.p(), r.n()}; }

RingElement el(const Ring& r, std::uint64_t x) { return {r, x}; }

// 1 + t + t^2 etc. from a digit list.
RingElement poly(const Ring& r, std::vector<std::uint32_t> digits) {
  digits.resize(r.n(), 0);
  return RingElement::from_digits(r, digits);
}

}  // namespace

TEST(RingExamples, MakeRing) {
  const Ring z8 = make_ring(Family::padic, 2, 3);
  EXPECT_EQ(z8.size(), 8u);
  EXPECT_EQ(z8.to_string(), "padic:p=2,n=3");
  const Ring f = make_ring(Family::series, 2, 3);
  EXPECT_EQ(f.size(), 8u);
  EXPECT_EQ(f.to_string(), "series:p=2,n=3");
  EXPECT_NAKS_ERROR(make_ring(Family::padic, 4, 3), ErrorCode::NonPrimeModulus);
  EXPECT_NAKS_ERROR(make_ring(Family::padic, 2, 0), ErrorCode::InvalidLevel);
  EXPECT_NAKS_ERROR(make_ring(Family::padic, 2, 63), ErrorCode::InvalidLevel);
}

TEST(RingExamples, AddAndMultiply) {
  const Ring z8 = make_ring(Family::padic, 2, 3);
  const Ring z4 = make_ring(Family::padic, 2, 2);
  EXPECT_EQ((el(z8, 5) + el(z8, 7)).packed(), 4u);
  EXPECT_EQ((el(z4, 3) * el(z4, 3)).packed(), 1u);
  const Ring f = make_ring(Family::series, 2, 3);
  EXPECT_EQ(poly(f, {1, 1}) * poly(f, {1, 1, 1}), RingElement::one(f));
  EXPECT_NAKS_ERROR(el(z8, 1) + el(z4, 1), ErrorCode::MixedRings);
  EXPECT_NAKS_ERROR(el(z8, 1) * el(f, 1), ErrorCode::MixedRings);
}

TEST(RingExamples, Units) {
  const Ring z8 = make_ring(Family::padic, 2, 3);
  EXPECT_TRUE(is_unit(el(z8, 3)));
  EXPECT_FALSE(is_unit(el(z8, 6)));
  const Ring f2 = make_ring(Family::series, 2, 2);
  EXPECT_FALSE(is_unit(poly(f2, {0, 1})));
}

TEST(RingExamples, Inverse) {
  const Ring z8 = make_ring(Family::padic, 2, 3);
  const Ring z4 = make_ring(Family::padic, 2, 2);
  EXPECT_EQ(ring_inverse(el(z8, 3)).packed(), 3u);
  EXPECT_EQ(ring_inverse(el(z4, 3)).packed(), 3u);
  const Ring f = make_ring(Family::series, 2, 3);
  EXPECT_EQ(ring_inverse(poly(f, {1, 1})), poly(f, {1, 1, 1}));
  EXPECT_NAKS_ERROR(ring_inverse(el(z8, 6)), ErrorCode::NotAUnit);
}

TEST(RingExamples, Valuation) {
  const Ring z8 = make_ring(Family::padic, 2, 3);
  EXPECT_EQ(valuation(el(z8, 4)), 2u);
  EXPECT_EQ(valuation(el(z8, 0)), 3u);
  const Ring f = make_ring(Family::series, 2, 3);
  EXPECT_EQ(valuation(poly(f, {0, 1, 1})), 1u);
}

TEST(RingExamples, ReduceLevel) {
  const Ring z8 = make_ring(Family::padic, 2, 3);
  const RingElement r = reduce_level(el(z8, 5), 2);
  EXPECT_EQ(r.ring(), make_ring(Family::padic, 2, 2));
  EXPECT_EQ(r.packed(), 1u);
  EXPECT_EQ(reduce_level(el(z8, 5), 3), el(z8, 5));
  const Ring f = make_ring(Family::series, 2, 3);
  EXPECT_EQ(reduce_level(poly(f, {1, 0, 1}), 2).packed(), 1u);
  EXPECT_NAKS_ERROR(reduce_level(el(z8, 5), 0), ErrorCode::InvalidLevel);
  EXPECT_NAKS_ERROR(reduce_level(el(z8, 5), 4), ErrorCode::InvalidLevel);
}

TEST(RingExamples, TextFormats) {
  const Ring z8 = make_ring(Family::padic, 2, 3);
  EXPECT_EQ(el(z8, 5).to_string(), "101");
  EXPECT_EQ(el(z8, 1).to_string(), "100");
  EXPECT_EQ(RingElement::parse(z8, "011").packed(), 6u);
  EXPECT_EQ(Ring::parse("series:p=3,n=4"), make_ring(Family::series, 3, 4));
  EXPECT_EQ(Ring::parse("padic:p=2,n=3"), z8);
  EXPECT_NAKS_ERROR(Ring::parse("padic:2,3"), ErrorCode::ParseError);
  EXPECT_NAKS_ERROR(Ring::parse("adic:p=2,n=3"), ErrorCode::ParseError);
  EXPECT_NAKS_ERROR(RingElement::parse(z8, "12"), ErrorCode::ParseError);
  EXPECT_NAKS_ERROR(RingElement::parse(z8, "1020"), ErrorCode::ParseError);
}

TEST(RingExamples, SeriesDiffersFromPadic) {
  const Ring z4 = make_ring(Family::padic, 2, 2);
  const Ring f = make_ring(Family::series, 2, 2);
  EXPECT_EQ((el(z4, 1) + el(z4, 1)).packed(), 2u);
  EXPECT_EQ((el(f, 1) + el(f, 1)).packed(), 0u);
}

TEST(RingProperties, KernelsMatchOracle) {
  gen::Gen g(11);
  for (const Ring& r : gen::small_rings(6, {2, 3, 5})) {
    const auto o = spec_of(r);
    for (int trial = 0; trial < 200; ++trial) {
      const auto x = g.element(r), y = g.element(r);
      ASSERT_EQ(r.add(x, y), o.add(x, y)) << r.to_string();
      ASSERT_EQ(r.sub(x, y), o.sub(x, y)) << r.to_string();
      ASSERT_EQ(r.neg(x), o.neg(x)) << r.to_string();
      ASSERT_EQ(r.mul(x, y), o.mul(x, y)) << r.to_string();
      ASSERT_EQ(r.valuation(x), o.valuation(x));
    }
  }
}

TEST(RingProperties, Axioms) {
  gen::Gen g(12);
  for (const Ring& r : gen::small_rings(6, {2, 3, 5})) {
    for (int trial = 0; trial < 300; ++trial) {
      const RingElement x = el(r, g.element(r)), y = el(r, g.element(r)), z = el(r, g.element(r));
      ASSERT_EQ((x + y) + z, x + (y + z));
      ASSERT_EQ((x * y) * z, x * (y * z));
      ASSERT_EQ(x + y, y + x);
      ASSERT_EQ(x * y, y * x);
      ASSERT_EQ(x * (y + z), x * y + x * z);
      ASSERT_EQ(x + RingElement::zero(r), x);
      ASSERT_EQ(x * RingElement::one(r), x);
      ASSERT_EQ(x - x, RingElement::zero(r));
    }
  }
}

TEST(RingProperties, InverseOfEveryUnit) {
  for (const Ring& r : gen::small_rings(4, {2, 3, 5, 7})) {
    for (std::uint64_t x = 0; x < r.size(); ++x) {
      if (!r.is_unit(x)) continue;
      ASSERT_EQ(r.mul(x, r.inverse(x)), 1u) << r.to_string() << " x=" << x;
    }
  }
  gen::Gen g(13);
  const Ring big = make_ring(Family::padic, 2147483647u, 2);
  const Ring wide = make_ring(Family::series, 3, 39);
  for (const Ring& r : {big, wide})
    for (int trial = 0; trial < 200; ++trial) {
      const auto x = g.unit(r);
      ASSERT_EQ(r.mul(x, r.inverse(x)), 1u);
    }
}

TEST(RingProperties, ValuationOfProduct) {
  gen::Gen g(14);
  for (const Ring& r : gen::small_rings(6, {2, 3, 5}))
    for (int trial = 0; trial < 200; ++trial) {
      const auto x = g.element(r), y = g.element(r);
      ASSERT_EQ(r.valuation(r.mul(x, y)), std::min(r.valuation(x) + r.valuation(y), r.n()));
    }
}

TEST(RingProperties, ReduceIsHomomorphism) {
  gen::Gen g(15);
  for (const Ring& r : gen::small_rings(6, {2, 3, 5}))
    for (std::uint32_t m = 1; m <= r.n(); ++m)
      for (int trial = 0; trial < 50; ++trial) {
        const RingElement x = el(r, g.element(r)), y = el(r, g.element(r));
        ASSERT_EQ(reduce_level(x + y, m), reduce_level(x, m) + reduce_level(y, m));
        ASSERT_EQ(reduce_level(x * y, m), reduce_level(x, m) * reduce_level(y, m));
      }
}

TEST(RingProperties, DigitRoundTrip) {
  gen::Gen g(16);
  for (const Ring& r : gen::small_rings(6, {2, 3, 5}))
    for (int trial = 0; trial < 100; ++trial) {
      const RingElement x = el(r, g.element(r));
      const auto digits = x.digits();
      ASSERT_EQ(digits.size(), r.n());
      for (auto digit : digits) ASSERT_LT(digit, r.p());
      ASSERT_EQ(RingElement::from_digits(r, digits), x);
      ASSERT_EQ(RingElement::parse(r, x.to_string()), x);
    }
}

TEST(RingProperties, ShiftMultipliesByUniformizerPower) {
  gen::Gen g(17);
  for (const Ring& r : gen::small_rings(6, {2, 3, 5})) {
    const auto o = spec_of(r);
    std::uint64_t pi = r.n() > 1 ? r.p() : 0;
    for (std::uint32_t k = 0; k <= r.n(); ++k)
      for (int trial = 0; trial < 20; ++trial) {
        const auto x = g.element(r);
        std::uint64_t expected = x;
        for (std::uint32_t i = 0; i < k; ++i) expected = o.mul(expected, pi);
        ASSERT_EQ(r.shift(x, k), expected);
      }
  }
}
