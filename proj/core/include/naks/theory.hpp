#pragma once

// Exact evaluation of the closed forms and combinatorial identities behind
// E[X_n]. Here q is any integer >= 2; nothing requires it to match an
// implemented ring. Throughout, A = q^{d-1} and P = 1 + q + ... + q^{d-1}.

#include <cstdint>
#include <span>
#include <vector>

#include "naks/projective.hpp"
#include "naks/rational.hpp"

namespace naks {

/// u_0 = 1, u_{k+1} = 1 - (1 - u_k / A)^A.
Rational u_sequence(std::uint64_t q, std::uint32_t d, std::uint32_t n);
/// All of u_0..u_n in one pass.
std::vector<Rational> u_sequence_prefix(std::uint64_t q, std::uint32_t d, std::uint32_t n);

/// E[X_n] = u'_n = 1 - (1 - u_{n-1} / A)^P, n >= 1.
Rational expected_measure(std::uint64_t q, std::uint32_t d, std::uint32_t n);

// Floating evaluations of the same recurrences (log1p/expm1), for n far
// beyond the reach of exact arithmetic. Display and asymptotics only.
double u_sequence_double(std::uint64_t q, std::uint32_t d, std::uint32_t n);
double expected_measure_double(std::uint64_t q, std::uint32_t d, std::uint32_t n);

/// 2 (q^d - 1) / ((q - 1)(q^{d-1} - 1)); n E[X_n] tends to it.
Rational asymptotic_constant(std::uint64_t q, std::uint32_t d);

/// 1 / (((q-1)/(q+1)) n + 1).
Rational lower_bound_dim2(std::uint64_t q, std::uint32_t n);
/// q^{2(n - ell)} / (((q-1)/(q+1)) n + 1).
Rational lower_bound_torsion(std::uint64_t q, std::uint32_t n, std::uint32_t ell);

struct ExpectationReport {
  std::uint64_t q;
  std::uint32_t d;
  std::uint32_t n;
  Rational u_n;
  Rational u_prime_n;
  Rational expected_measure;
  Rational expected_card;  // q^{nd} u'_n
};

ExpectationReport expectation_report(std::uint64_t q, std::uint32_t d, std::uint32_t n);

/// h : [1, l] -> [1, n]. The convention h(0) = n is implicit.
struct HeightFunction {
  std::uint32_t n = 0;
  std::vector<std::uint32_t> values;

  HeightFunction() = default;
  /// Throws InvalidArgument unless every value lies in [1, n].
  HeightFunction(std::uint32_t level, std::vector<std::uint32_t> heights);

  std::size_t length() const noexcept { return values.size(); }
  bool operator==(const HeightFunction&) const = default;
};

/// h_A(j) = n - v_n(a_j, a_{j-1}) for A sorted in enumeration order.
/// Throws UnsortedSubset unless strictly increasing, EmptySubset if empty.
HeightFunction height_function(std::span<const ProjectivePoint> sorted_subset);
/// Same, for point indices of `space` (sorted ascending).
HeightFunction height_function(const ProjectiveSpace& space, std::span<const std::uint64_t> sorted_indices);

/// M(h)(j): number of j' <= j with h(j') = h(j) and h <= h(j) on [j', j].
std::vector<std::uint64_t> multiplicity(const HeightFunction& h);

/// W(h)(j) = (A - M(j)) / (A (M(j) + 1)).
std::vector<Rational> weight(const HeightFunction& h, std::uint64_t q, std::uint32_t d);
/// W'(h): as W, but with P in place of A in the numerator where h(j) = n.
std::vector<Rational> modified_weight(const HeightFunction& h, std::uint64_t q, std::uint32_t d);

/// Number of subsets of P^{d-1}(R_n) with height function h:
/// (P / A) A^n prod_j W'(h)(j) A^{h(j)}. Throws NonIntegralCount if the
/// product fails to be an integer.
BigInt count_with_height(const HeightFunction& h, std::uint64_t q, std::uint32_t d);

/// E[C_A] = q^n prod_j q^{-(d-1) h(j)}.
Rational directional_mean(const HeightFunction& h, std::uint64_t q, std::uint32_t d);

/// Card B_A = q^{nd} prod_j q^{d h(j)}.
BigInt card_fiber_B_A(const HeightFunction& h, std::uint64_t q, std::uint32_t d);

inline constexpr std::uint32_t kMaxInclusionExclusionPoints = 20;

/// sum over nonempty A of (-1)^{1+|A|} E[C_A]; equals q^{nd} u'_n.
/// Throws TooManySubsets above 20 points.
Rational inclusion_exclusion_mean(const ProjectiveSpace& space);

inline constexpr std::uint64_t kHeightSumTermLimit = 100'000'000;

/// sum over h in H_n of (-1)^{l(h)} prod_j W(h)(j) (or W' when `modified`).
///
/// Splitting h at its occurrences of the top value n leaves blocks in
/// H_{n-1}, and the weights factor over the blocks. A separator whose weight
/// vanishes cuts off every longer split, so each level is a finite sum of
/// at most A (or P) block counts. Throws SumExplosion when n A or P exceeds
/// `term_limit`.
Rational weighted_height_sum(std::uint64_t q, std::uint32_t d, std::uint32_t n, bool modified,
                             std::uint64_t term_limit = kHeightSumTermLimit);

}  // namespace naks
