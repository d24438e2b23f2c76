#pragma once

// Sampling X_n over uniformly random f in Omega_n.

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "naks/kakeya.hpp"
#include "naks/projective.hpp"
#include "naks/rational.hpp"
#include "naks/residue_ring.hpp"

namespace naks {

inline constexpr std::uint64_t kDefaultSamples = 100'000;
inline constexpr std::uint32_t kDefaultBins = 100;

struct ExperimentConfig {
  Family family = Family::padic;
  std::uint32_t p = 2;
  std::uint32_t d = 2;
  std::uint32_t n_min = 1;
  std::uint32_t n_max = 1;
  std::uint64_t samples = kDefaultSamples;
  std::uint64_t seed = 0;
  std::uint32_t workers = 1;
  std::uint32_t bins = kDefaultBins;
  /// Raise InvariantViolation when a d = 2 sample falls below the lower bound.
  bool enforce_lower_bound = true;
  std::uint64_t memory_cap = kDefaultMemoryCap;

  /// Throws NonPrimeModulus, InvalidLevel or InvalidArgument.
  void validate() const;
};

struct HistogramBin {
  double lower;
  double upper;
  std::uint64_t count;
  double density;  // count / (total * width)
};

struct Histogram {
  std::vector<HistogramBin> bins;
  double empirical_mean = 0;
  std::optional<double> theoretical_mean;
};

/// Equal-width bins over [min, max] of `values`; the maximum lands in the
/// last bin. If all values coincide the range is a unit interval centred on
/// them.
Histogram histogram(std::span<const double> values, std::uint32_t bins,
                    std::optional<double> theoretical_mean = {});

struct SampleStats {
  std::uint64_t q = 0;
  std::uint32_t d = 0;
  std::uint32_t n = 0;
  std::uint64_t seed = 0;
  std::uint64_t count = 0;
  std::uint64_t cells = 0;  // q^{nd}
  BigInt card_sum;
  BigInt card_square_sum;
  std::uint64_t card_min = 0;
  std::uint64_t card_max = 0;
  std::uint64_t even_count = 0;
  std::uint64_t lower_bound_violations = 0;
  double mean = 0;
  double std = 0;  // population
  double x_min = 0;
  double x_max = 0;
  double parity_even_fraction = 0;
  double mean_theoretical = 0;
  Histogram hist;

  /// card_sum / (count q^{nd}).
  Rational mean_rational() const;
  bool operator==(const SampleStats&) const;
};

/// Stream seed for samples at level n; a fresh sample for every n.
std::uint64_t level_seed(std::uint64_t seed, std::uint32_t n) noexcept;

/// Cards of samples [0, count) at the level of `space`; sample i uses
/// SampleStream(level_seed(seed, n), i).
std::vector<std::uint64_t> sample_cards(const std::shared_ptr<const ProjectiveSpace>& space, std::uint64_t seed,
                                        std::uint64_t count, std::uint32_t workers,
                                        std::uint64_t memory_cap = kDefaultMemoryCap);

/// Statistics of sampled cards at one level; no invariant enforcement.
SampleStats summarize(const Ring& ring, std::uint32_t d, std::uint64_t seed, std::span<const std::uint64_t> cards,
                      std::uint32_t bins);

/// One SampleStats per n in [n_min, n_max]. The result depends on
/// (seed, samples) only, never on the worker count.
std::vector<SampleStats> run_experiment(const ExperimentConfig& config);

/// The map drawn as sample `index` of level n.
LipschitzMap sample_map(const std::shared_ptr<const ProjectiveSpace>& space, std::uint64_t seed, std::uint64_t index);

struct ExactResult {
  std::uint64_t maps = 0;
  BigInt card_sum;
  Rational mean_card;
  Rational mean_measure;
};

/// Average of X_n over all of Omega_n. Throws EnumerationTooLarge.
ExactResult exact_experiment(const std::shared_ptr<const ProjectiveSpace>& space,
                             std::uint64_t cap = kDefaultEnumerationCap);

/// card >= q^{2n} / (((q-1)/(q+1)) n + 1), exactly.
bool meets_lower_bound_dim2(std::uint64_t q, std::uint32_t n, std::uint64_t card);

/// Columns q,d,n,samples,seed,mean_empirical,std_empirical,mean_theoretical,
/// parity_even_fraction,min_empirical,max_empirical.
void write_stats_csv(std::span<const SampleStats> stats, std::ostream& out, bool header = true);
/// Columns bin_lower,bin_upper,density.
void write_histogram_csv(const Histogram& hist, std::ostream& out);

/// Fixed 6-decimal rendering used by the writers.
std::string format_decimal(double value);

}  // namespace naks
