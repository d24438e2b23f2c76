#include "naks/theory.hpp"

#include <bit>
#include <cmath>

#include "naks/error.hpp"

namespace naks {

namespace {

void require_qd(std::uint64_t q, std::uint32_t d) {
  if (q < 2) throw Error(ErrorCode::InvalidArgument, "q must be >= 2");
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "d must be >= 2");
}

BigInt big(std::uint64_t value) { return BigInt(static_cast<unsigned long>(value)); }

BigInt affine_count(std::uint64_t q, std::uint32_t d) { return pow(big(q), d - 1); }

// Exponents small enough for machine arithmetic; A and P themselves may not be.
std::uint64_t to_exponent(const BigInt& value) {
  if (!value.fits_ulong_p()) throw Error(ErrorCode::InvalidArgument, "exponent too large: " + value.get_str());
  return value.get_ui();
}

double q_power(std::uint64_t q, std::uint32_t k) { return std::pow(static_cast<double>(q), static_cast<double>(k)); }

Rational q_power_signed(std::uint64_t q, std::int64_t exponent) {
  const BigInt magnitude = pow(big(q), static_cast<std::uint64_t>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? ratio(BigInt(1), magnitude) : Rational(magnitude);
}

}  // namespace

std::vector<Rational> u_sequence_prefix(std::uint64_t q, std::uint32_t d, std::uint32_t n) {
  require_qd(q, d);
  const BigInt a = affine_count(q, d);
  const std::uint64_t a_exp = to_exponent(a);
  std::vector<Rational> u;
  u.reserve(n + 1);
  u.emplace_back(1);
  for (std::uint32_t k = 0; k < n; ++k) {
    const Rational base = 1 - u.back() / Rational(a);
    u.push_back(1 - pow(base, a_exp));
  }
  return u;
}

Rational u_sequence(std::uint64_t q, std::uint32_t d, std::uint32_t n) { return u_sequence_prefix(q, d, n).back(); }

Rational expected_measure(std::uint64_t q, std::uint32_t d, std::uint32_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidLevel, "E[X_n] needs n >= 1");
  const Rational previous = u_sequence(q, d, n - 1);
  const Rational base = 1 - previous / Rational(affine_count(q, d));
  return 1 - pow(base, to_exponent(projective_line_count(q, d)));
}

double u_sequence_double(std::uint64_t q, std::uint32_t d, std::uint32_t n) {
  require_qd(q, d);
  const double a = q_power(q, d - 1);
  double u = 1.0;
  for (std::uint32_t k = 0; k < n; ++k) u = -std::expm1(a * std::log1p(-u / a));
  return u;
}

double expected_measure_double(std::uint64_t q, std::uint32_t d, std::uint32_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidLevel, "E[X_n] needs n >= 1");
  const double a = q_power(q, d - 1);
  const double p = projective_line_count(q, d).get_d();
  return -std::expm1(p * std::log1p(-u_sequence_double(q, d, n - 1) / a));
}

Rational asymptotic_constant(std::uint64_t q, std::uint32_t d) {
  require_qd(q, d);
  const BigInt qd = pow(big(q), d);
  return ratio(2 * (qd - 1), (big(q) - 1) * (affine_count(q, d) - 1));
}

Rational lower_bound_dim2(std::uint64_t q, std::uint32_t n) {
  if (q < 2) throw Error(ErrorCode::InvalidArgument, "q must be >= 2");
  if (n < 1) throw Error(ErrorCode::InvalidLevel, "n must be >= 1");
  // 1 / ((q-1) n / (q+1) + 1) = (q+1) / ((q-1) n + q + 1)
  return ratio(big(q) + 1, (big(q) - 1) * n + big(q) + 1);
}

Rational lower_bound_torsion(std::uint64_t q, std::uint32_t n, std::uint32_t ell) {
  if (ell > n) throw Error(ErrorCode::InvalidLevel, "ell must lie in [0, n]");
  return Rational(pow(big(q), 2 * std::uint64_t{n - ell})) * lower_bound_dim2(q, n);
}

ExpectationReport expectation_report(std::uint64_t q, std::uint32_t d, std::uint32_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidLevel, "n must be >= 1");
  const auto u = u_sequence_prefix(q, d, n);
  const Rational base = 1 - u[n - 1] / Rational(affine_count(q, d));
  const Rational u_prime = 1 - pow(base, to_exponent(projective_line_count(q, d)));
  return {q, d, n, u[n], u_prime, u_prime, Rational(pow(big(q), std::uint64_t{n} * d)) * u_prime};
}

HeightFunction::HeightFunction(std::uint32_t level, std::vector<std::uint32_t> heights)
    : n(level), values(std::move(heights)) {
  if (n < 1) throw Error(ErrorCode::InvalidLevel, "height functions need n >= 1");
  for (std::uint32_t h : values)
    if (h < 1 || h > n) throw Error(ErrorCode::InvalidArgument, "height " + std::to_string(h) + " outside [1, n]");
}

HeightFunction height_function(std::span<const ProjectivePoint> sorted_subset) {
  if (sorted_subset.empty()) throw Error(ErrorCode::EmptySubset, "height function of the empty set");
  const std::uint32_t n = sorted_subset.front().level();
  std::vector<std::uint32_t> heights;
  heights.reserve(sorted_subset.size() - 1);
  for (std::size_t j = 1; j < sorted_subset.size(); ++j) {
    if (!(sorted_subset[j - 1] < sorted_subset[j]))
      throw Error(ErrorCode::UnsortedSubset, "subset is not strictly increasing at position " + std::to_string(j));
    heights.push_back(n - valuation_distance(sorted_subset[j], sorted_subset[j - 1]));
  }
  return {n, std::move(heights)};
}

HeightFunction height_function(const ProjectiveSpace& space, std::span<const std::uint64_t> sorted_indices) {
  if (sorted_indices.empty()) throw Error(ErrorCode::EmptySubset, "height function of the empty set");
  if (sorted_indices.front() >= space.size()) throw Error(ErrorCode::IndexOutOfRange, "point index out of range");
  std::vector<std::uint32_t> heights;
  heights.reserve(sorted_indices.size() - 1);
  for (std::size_t j = 1; j < sorted_indices.size(); ++j) {
    if (sorted_indices[j - 1] >= sorted_indices[j])
      throw Error(ErrorCode::UnsortedSubset, "indices are not strictly increasing at position " + std::to_string(j));
    if (sorted_indices[j] >= space.size()) throw Error(ErrorCode::IndexOutOfRange, "point index out of range");
    heights.push_back(space.level() - space.distance(sorted_indices[j], sorted_indices[j - 1]));
  }
  return {space.level(), std::move(heights)};
}

std::vector<std::uint64_t> multiplicity(const HeightFunction& h) {
  // Stack of (value, run count) with values strictly decreasing upwards.
  std::vector<std::pair<std::uint32_t, std::uint64_t>> stack;
  std::vector<std::uint64_t> out;
  out.reserve(h.length());
  for (std::uint32_t value : h.values) {
    while (!stack.empty() && stack.back().first < value) stack.pop_back();
    if (!stack.empty() && stack.back().first == value)
      ++stack.back().second;
    else
      stack.emplace_back(value, 1);
    out.push_back(stack.back().second);
  }
  return out;
}

namespace {

std::vector<Rational> weights(const HeightFunction& h, std::uint64_t q, std::uint32_t d, bool modified) {
  require_qd(q, d);
  const BigInt a = affine_count(q, d);
  const BigInt p = projective_line_count(q, d);
  const auto m = multiplicity(h);
  std::vector<Rational> out;
  out.reserve(m.size());
  for (std::size_t j = 0; j < m.size(); ++j) {
    const BigInt& top = (modified && h.values[j] == h.n) ? p : a;
    out.push_back(ratio(top - big(m[j]), a * (big(m[j]) + 1)));
  }
  return out;
}

}  // namespace

std::vector<Rational> weight(const HeightFunction& h, std::uint64_t q, std::uint32_t d) {
  return weights(h, q, d, false);
}

std::vector<Rational> modified_weight(const HeightFunction& h, std::uint64_t q, std::uint32_t d) {
  return weights(h, q, d, true);
}

BigInt count_with_height(const HeightFunction& h, std::uint64_t q, std::uint32_t d) {
  const BigInt a = affine_count(q, d);
  Rational total = ratio(projective_line_count(q, d) * pow(a, h.n), a);
  const auto w = modified_weight(h, q, d);
  for (std::size_t j = 0; j < w.size(); ++j) total *= w[j] * Rational(pow(a, h.values[j]));
  total.canonicalize();
  if (total.get_den() != 1)
    throw Error(ErrorCode::NonIntegralCount, "subset count evaluated to " + to_string(total));
  return total.get_num();
}

Rational directional_mean(const HeightFunction& h, std::uint64_t q, std::uint32_t d) {
  require_qd(q, d);
  std::int64_t exponent = h.n;
  for (std::uint32_t value : h.values) exponent -= std::int64_t{d - 1} * value;
  return q_power_signed(q, exponent);
}

BigInt card_fiber_B_A(const HeightFunction& h, std::uint64_t q, std::uint32_t d) {
  require_qd(q, d);
  std::uint64_t exponent = std::uint64_t{h.n} * d;
  for (std::uint32_t value : h.values) exponent += std::uint64_t{d} * value;
  return pow(big(q), exponent);
}

Rational inclusion_exclusion_mean(const ProjectiveSpace& space) {
  const std::uint64_t points = space.size();
  if (points > kMaxInclusionExclusionPoints)
    throw Error(ErrorCode::TooManySubsets, std::to_string(points) + " points give 2^" + std::to_string(points) +
                                               " subsets; the limit is 2^20");
  const std::uint32_t n = space.level();
  const std::uint32_t d = space.dimension();
  const std::uint64_t q = space.ring().p();

  std::vector<std::uint32_t> height(points * points);
  for (std::uint64_t a = 0; a < points; ++a)
    for (std::uint64_t b = 0; b < points; ++b) height[a * points + b] = n - space.distance(a, b);

  // E[C_A] depends on A only through |A| parity and sum_j h_A(j).
  const std::uint64_t max_sum = std::uint64_t{n} * points;
  std::vector<std::int64_t> signed_count(max_sum + 1, 0);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << points); ++mask) {
    std::uint64_t sum = 0;
    std::uint64_t previous = static_cast<std::uint64_t>(std::countr_zero(mask));
    for (std::uint64_t rest = mask & (mask - 1); rest != 0; rest &= rest - 1) {
      const auto current = static_cast<std::uint64_t>(std::countr_zero(rest));
      sum += height[current * points + previous];
      previous = current;
    }
    signed_count[sum] += (std::popcount(mask) % 2 == 1) ? 1 : -1;
  }

  Rational total = 0;
  for (std::uint64_t sum = 0; sum <= max_sum; ++sum) {
    if (signed_count[sum] == 0) continue;
    const Rational mean = q_power_signed(q, static_cast<std::int64_t>(n) - static_cast<std::int64_t>((d - 1) * sum));
    total += Rational(BigInt(static_cast<long>(signed_count[sum]))) * mean;
  }
  return total;
}

Rational weighted_height_sum(std::uint64_t q, std::uint32_t d, std::uint32_t n, bool modified,
                             std::uint64_t term_limit) {
  require_qd(q, d);
  if (n < 1) throw Error(ErrorCode::InvalidLevel, "n must be >= 1");
  const BigInt a = affine_count(q, d);
  const BigInt top = modified ? projective_line_count(q, d) : a;
  const BigInt limit(static_cast<unsigned long>(term_limit));
  if (a * n > limit || top > limit)
    throw Error(ErrorCode::SumExplosion, "height sum needs more than " + std::to_string(term_limit) + " terms");

  // h in H_k splits at its values equal to k into m + 1 blocks of H_{k-1};
  // the j-th separator has M = j and contributes -(T - j) / ((j + 1) A).
  auto level = [&](const Rational& inner, const BigInt& threshold) {
    const std::uint64_t blocks = threshold.get_ui();
    Rational sum = 0;
    Rational coefficient = 1;
    Rational power = inner;
    for (std::uint64_t m = 0; m < blocks; ++m) {
      if (m > 0) {
        coefficient *= ratio(big(m) - threshold, a * big(m + 1));
        power *= inner;
      }
      sum += coefficient * power;
    }
    return sum;
  };

  Rational s = 1;
  for (std::uint32_t k = 1; k < n; ++k) s = level(s, a);
  return level(s, top);
}

}  // namespace naks
