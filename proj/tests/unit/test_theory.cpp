#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <map>

#include "expect_error.hpp"
#include "frozen.hpp"
#include "gen.hpp"
#include "height_oracles.hpp"
#include "naks/kakeya.hpp"
#include "naks/lipschitz.hpp"
#include "naks/theory.hpp"
#include "oracles.hpp"

using namespace naks;

namespace {

BigInt big(std::uint64_t x) { return BigInt(static_cast<unsigned long>(x)); }

std::vector<std::uint64_t> members(std::uint64_t mask) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; mask; ++i, mask >>= 1)
    if (mask & 1) out.push_back(i);
  return out;
}

std::string key(const HeightFunction& h) {
  std::string out;
  for (auto v : h.values) out += std::to_string(v) + ",";
  return out;
}

// One bit per cell, for spaces with at most 64 cells.
std::uint64_t segment_mask(const LipschitzMap& f, std::uint64_t a) {
  std::uint64_t mask = 0;
  for (auto cell : segment(f.space()->point_at(a), f.value(a), 0)) mask |= std::uint64_t{1} << cell;
  return mask;
}

}  // namespace

TEST(TheoryExamples, FrozenRecurrence) {
  for (const auto& row : frozen::kU) EXPECT_EQ(u_sequence(row.q, row.d, row.n), parse_rational(row.value));
  for (const auto& row : frozen::kExpected)
    EXPECT_EQ(expected_measure(row.q, row.d, row.n), parse_rational(row.value)) << row.q << " " << row.d << " " << row.n;
  const auto prefix = u_sequence_prefix(2, 2, 3);
  ASSERT_EQ(prefix.size(), 4u);
  EXPECT_EQ(prefix[2], Rational(39, 64));
}

TEST(TheoryExamples, ReferenceTables) {
  for (std::uint32_t k = 0; k < 7; ++k) {
    EXPECT_NEAR(expected_measure_double(2, 2, 5 + k), frozen::kTableDim2[k], 5e-4 + 1e-12);
    EXPECT_NEAR(expected_measure_double(2, 3, 3 + k), frozen::kTableDim3[k], 5e-4 + 1e-12);
  }
}

TEST(TheoryExamples, Bounds) {
  EXPECT_EQ(asymptotic_constant(2, 2), 6);
  EXPECT_EQ(asymptotic_constant(2, 3), Rational(14, 3));
  EXPECT_EQ(lower_bound_dim2(2, 1), Rational(3, 4));
  EXPECT_EQ(lower_bound_dim2(3, 2), Rational(1, 2));
  EXPECT_EQ(lower_bound_torsion(2, 2, 1), Rational(12, 5));
  EXPECT_EQ(lower_bound_torsion(2, 2, 0) / 16, lower_bound_dim2(2, 2));
  const auto report = expectation_report(2, 2, 2);
  EXPECT_EQ(report.u_n, Rational(39, 64));
  EXPECT_EQ(report.expected_measure, Rational(387, 512));
  EXPECT_EQ(report.expected_card, Rational(387, 32));
}

TEST(TheoryExamples, Multiplicity) {
  const HeightFunction h(5, {3, 2, 4, 3, 1, 3, 5, 2, 2, 2});
  EXPECT_EQ(multiplicity(h), (std::vector<std::uint64_t>{1, 1, 1, 1, 1, 2, 1, 1, 2, 3}));
  EXPECT_TRUE(multiplicity(HeightFunction(3, {})).empty());
  EXPECT_NAKS_ERROR(HeightFunction(3, {1, 4}), ErrorCode::InvalidArgument);
  EXPECT_NAKS_ERROR(HeightFunction(3, {0}), ErrorCode::InvalidArgument);
}

TEST(TheoryExamples, Weights) {
  const HeightFunction h(2, {1, 1, 2, 2});
  EXPECT_EQ(weight(h, 2, 2), (std::vector<Rational>{Rational(1, 4), 0, Rational(1, 4), 0}));
  EXPECT_EQ(modified_weight(h, 2, 2), (std::vector<Rational>{Rational(1, 4), 0, Rational(1, 2), Rational(1, 6)}));
  EXPECT_EQ(directional_mean(HeightFunction(2, {2}), 2, 2), 1);
  EXPECT_EQ(directional_mean(HeightFunction(2, {2, 1}), 2, 2), Rational(1, 2));
  EXPECT_EQ(card_fiber_B_A(HeightFunction(1, {1, 1}), 2, 2), 64);
}

TEST(TheoryExamples, HeightFunctionOfSubsets) {
  const auto space = ProjectiveSpace::create(Ring::make(Family::padic, 2, 2), 2);
  const std::vector<std::uint64_t> all{0, 1, 2, 3, 4, 5};
  const auto h = height_function(*space, all);
  ASSERT_EQ(h.length(), 5u);
  for (std::uint64_t k = 1; k < 6; ++k) EXPECT_EQ(h.values[k - 1], 2 - space->distance(k - 1, k));
  EXPECT_NAKS_ERROR(height_function(*space, std::vector<std::uint64_t>{}), ErrorCode::EmptySubset);
  EXPECT_NAKS_ERROR(height_function(*space, std::vector<std::uint64_t>{2, 1}), ErrorCode::UnsortedSubset);
  EXPECT_NAKS_ERROR(height_function(*space, std::vector<std::uint64_t>{1, 1}), ErrorCode::UnsortedSubset);
  EXPECT_NAKS_ERROR(height_function(*space, std::vector<std::uint64_t>{9}), ErrorCode::IndexOutOfRange);
  const auto points = enumerate_projective(space->ring(), 2);
  EXPECT_EQ(height_function(std::span(points)), height_function(*space, all));
}

TEST(TheoryProperties, MultiplicityMatchesDefinition) {
  gen::Gen g(50);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto n = static_cast<std::uint32_t>(1 + g.below(5));
    std::vector<std::uint32_t> values(g.below(12));
    for (auto& v : values) v = static_cast<std::uint32_t>(1 + g.below(n));
    ASSERT_EQ(multiplicity(HeightFunction(n, values)), oracle::naive_multiplicity(values));
  }
}

TEST(TheoryProperties, CountsMatchSubsetBuckets) {
  struct Case {
    Family family;
    std::uint32_t p, d, n;
  };
  for (const Case c : {Case{Family::padic, 2, 2, 1}, Case{Family::padic, 2, 2, 2}, Case{Family::series, 2, 2, 2},
                       Case{Family::padic, 3, 2, 1}, Case{Family::padic, 2, 3, 1}, Case{Family::padic, 5, 2, 1},
                       Case{Family::padic, 3, 2, 2}}) {
    const auto space = ProjectiveSpace::create(Ring::make(c.family, c.p, c.n), c.d);
    ASSERT_LE(space->size(), 20u);
    std::map<std::string, std::pair<HeightFunction, std::uint64_t>> buckets;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << space->size()); ++mask) {
      const auto h = height_function(*space, members(mask));
      auto& slot = buckets[key(h)];
      slot.first = h;
      ++slot.second;
    }
    BigInt total = 0;
    for (const auto& [name, entry] : buckets) {
      ASSERT_EQ(count_with_height(entry.first, c.p, c.d), big(entry.second)) << name;
      total += count_with_height(entry.first, c.p, c.d);
    }
    EXPECT_EQ(total, pow(BigInt(2), space->size()) - 1);
  }
}

TEST(TheoryProperties, DirectionalMeanMatchesOmegaAverage) {
  struct Case {
    std::uint32_t p, d, n;
  };
  for (const Case c : {Case{2, 2, 1}, Case{3, 2, 1}, Case{2, 2, 2}, Case{2, 3, 1}}) {
    const auto space = ProjectiveSpace::create(Ring::make(Family::padic, c.p, c.n), c.d);
    ASSERT_LE(cell_count(space->ring(), c.d), 64u);
    const std::uint64_t subsets = (std::uint64_t{1} << space->size()) - 1;
    std::vector<std::uint64_t> sums(subsets + 1, 0);
    std::vector<std::uint64_t> masks(space->size()), common(subsets + 1);
    std::uint64_t maps = 0;
    enumerate_omega(space, [&](const LipschitzMap& f) {
      ++maps;
      for (std::uint64_t a = 0; a < space->size(); ++a) masks[a] = segment_mask(f, a);
      common[0] = ~std::uint64_t{0};
      for (std::uint64_t subset = 1; subset <= subsets; ++subset) {
        common[subset] = common[subset & (subset - 1)] & masks[std::countr_zero(subset)];
        sums[subset] += static_cast<std::uint64_t>(std::popcount(common[subset]));
      }
    });
    ASSERT_EQ(big(maps), omega_cardinality(c.p, c.d, c.n));
    Rational inclusion_exclusion = 0;
    for (std::uint64_t subset = 1; subset <= subsets; ++subset) {
      const Rational mean = ratio(big(sums[subset]), big(maps));
      ASSERT_EQ(directional_mean(height_function(*space, members(subset)), c.p, c.d), mean) << subset;
      inclusion_exclusion += std::popcount(subset) % 2 ? mean : Rational(-mean);
    }
    EXPECT_EQ(inclusion_exclusion, inclusion_exclusion_mean(*space));
  }
}

TEST(TheoryProperties, InclusionExclusionMatchesRecurrence) {
  for (const auto& r : gen::small_rings(3, {2, 3, 5}))
    for (std::uint32_t d : {2u, 3u}) {
      if (projective_cardinality(r.p(), d, r.n()) > kMaxInclusionExclusionPoints) continue;
      const auto space = ProjectiveSpace::create(r, d);
      EXPECT_EQ(inclusion_exclusion_mean(*space),
                expected_measure(r.p(), d, r.n()) * pow(big(r.p()), std::uint64_t{r.n()} * d))
          << r.to_string() << " d=" << d;
    }
  const auto big_space = ProjectiveSpace::create(Ring::make(Family::padic, 2, 4), 2);
  EXPECT_NAKS_ERROR(inclusion_exclusion_mean(*big_space), ErrorCode::TooManySubsets);
}

TEST(TheoryProperties, HeightSumsMatchOracles) {
  struct Case {
    std::uint64_t q;
    std::uint32_t d, n;
  };
  for (const Case c : {Case{2, 2, 1}, Case{2, 2, 2}, Case{2, 2, 3}, Case{2, 2, 4}, Case{3, 2, 2}, Case{3, 2, 3},
                       Case{2, 3, 2}, Case{4, 2, 2}, Case{5, 2, 3}, Case{2, 3, 3}, Case{6, 2, 2}}) {
    for (bool modified : {false, true}) {
      const Rational fast = weighted_height_sum(c.q, c.d, c.n, modified);
      EXPECT_EQ(fast, oracle::height_sum_states(c.q, c.d, c.n, modified))
          << c.q << " " << c.d << " " << c.n << " " << modified;
      if (c.d == 2 && (c.n <= 2 || c.q == 2)) {
        EXPECT_EQ(fast, oracle::height_sum_dfs(c.q, c.d, c.n, modified));
      }
    }
  }
}

TEST(TheoryProperties, HeightSumsMatchRecurrence) {
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u})
    for (std::uint32_t d : {2u, 3u})
      for (std::uint32_t n = 1; n <= 4; ++n) {
        if (d == 3 && q > 4 && n > 2) continue;
        const Rational scale = ratio(projective_line_count(q, d), pow(big(q), d - 1));
        ASSERT_EQ(weighted_height_sum(q, d, n, false), u_sequence(q, d, n)) << q << " " << d << " " << n;
        ASSERT_EQ(weighted_height_sum(q, d, n, true) * scale, expected_measure(q, d, n));
      }
  EXPECT_NAKS_ERROR(weighted_height_sum(2, 2, 10, false, 5), ErrorCode::SumExplosion);
  EXPECT_NAKS_ERROR(weighted_height_sum(2, 3, 1, true, 6), ErrorCode::SumExplosion);
}

TEST(TheoryProperties, DoublesTrackExactValues) {
  for (std::uint64_t q : {2u, 3u, 5u})
    for (std::uint32_t d : {2u, 3u})
      for (std::uint32_t n = 1; n <= 4; ++n) {
        if (d == 3 && q > 2 && n > 2) continue;
        ASSERT_NEAR(expected_measure_double(q, d, n), expected_measure(q, d, n).get_d(), 1e-12);
        ASSERT_NEAR(u_sequence_double(q, d, n), u_sequence(q, d, n).get_d(), 1e-12);
      }
}

TEST(TheoryProperties, DecreasingInN) {
  for (std::uint64_t q : {2u, 3u, 5u})
    for (std::uint32_t d : {2u, 3u, 4u}) {
      for (std::uint32_t n = 1; n < 50; ++n)
        ASSERT_GT(expected_measure_double(q, d, n), expected_measure_double(q, d, n + 1)) << q << " " << d << " " << n;
    }
  for (std::uint32_t n = 1; n < 6; ++n) ASSERT_GT(expected_measure(2, 2, n), expected_measure(2, 2, n + 1));
}

TEST(TheoryProperties, Asymptotics) {
  for (const auto& row : frozen::kScaledDim2)
    EXPECT_NEAR(row.n * expected_measure_double(2, 2, row.n), row.value, 5e-4) << row.n;
  for (std::uint64_t q : {2u, 3u})
    for (std::uint32_t d : {2u, 3u}) {
      const double c = asymptotic_constant(q, d).get_d();
      const double at = 1e6 * expected_measure_double(q, d, 1000000);
      EXPECT_NEAR(at / c, 1.0, 1e-2) << q << " " << d;
    }
}

TEST(TheoryProperties, ExpectationAboveDeterministicBound) {
  for (std::uint64_t q : {2u, 3u, 5u, 7u})
    for (std::uint32_t n = 1; n <= 100; ++n)
      ASSERT_GE(expected_measure_double(q, 2, n), lower_bound_dim2(q, n).get_d()) << q << " " << n;
}
