#include "naks/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

#include "naks/error.hpp"
#include "naks/lipschitz.hpp"
#include "naks/random.hpp"
#include "naks/theory.hpp"

namespace naks {

namespace {

constexpr std::uint64_t kChunk = 256;

BigInt big(std::uint64_t value) { return BigInt(static_cast<unsigned long>(value)); }

}  // namespace

void ExperimentConfig::validate() const {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrimeModulus, std::to_string(p) + " is not prime");
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "dimension must be >= 2");
  if (n_min < 1) throw Error(ErrorCode::InvalidLevel, "n must be >= 1");
  if (n_min > n_max) throw Error(ErrorCode::InvalidArgument, "empty n range");
  if (samples < 1) throw Error(ErrorCode::InvalidArgument, "samples must be >= 1");
  if (bins < 1) throw Error(ErrorCode::InvalidArgument, "bins must be >= 1");
  if (workers < 1) throw Error(ErrorCode::InvalidArgument, "workers must be >= 1");
}

Histogram histogram(std::span<const double> values, std::uint32_t bins, std::optional<double> theoretical_mean) {
  if (bins < 1) throw Error(ErrorCode::InvalidArgument, "bins must be >= 1");
  Histogram hist;
  hist.theoretical_mean = theoretical_mean;
  if (values.empty()) return hist;

  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  double lo = *lo_it;
  double hi = *hi_it;
  if (lo == hi) {
    lo -= 0.5;
    hi += 0.5;
  }
  const double width = (hi - lo) / bins;
  std::vector<std::uint64_t> counts(bins, 0);
  double sum = 0;
  for (double v : values) {
    sum += v;
    auto index = static_cast<std::uint64_t>(std::floor((v - lo) / width));
    counts[std::min<std::uint64_t>(index, bins - 1)]++;
  }
  hist.empirical_mean = sum / static_cast<double>(values.size());
  const double total = static_cast<double>(values.size());
  hist.bins.reserve(bins);
  for (std::uint32_t b = 0; b < bins; ++b) {
    const double lower = lo + width * b;
    const double upper = (b + 1 == bins) ? hi : lo + width * (b + 1);
    hist.bins.push_back({lower, upper, counts[b], static_cast<double>(counts[b]) / (total * width)});
  }
  return hist;
}

Rational SampleStats::mean_rational() const {
  return ratio(card_sum, big(count) * big(cells));
}

bool SampleStats::operator==(const SampleStats& o) const {
  auto same_hist = [](const Histogram& a, const Histogram& b) {
    if (a.bins.size() != b.bins.size() || a.empirical_mean != b.empirical_mean ||
        a.theoretical_mean != b.theoretical_mean)
      return false;
    for (std::size_t i = 0; i < a.bins.size(); ++i)
      if (a.bins[i].lower != b.bins[i].lower || a.bins[i].upper != b.bins[i].upper ||
          a.bins[i].count != b.bins[i].count || a.bins[i].density != b.bins[i].density)
        return false;
    return true;
  };
  return q == o.q && d == o.d && n == o.n && seed == o.seed && count == o.count && cells == o.cells &&
         card_sum == o.card_sum && card_square_sum == o.card_square_sum && card_min == o.card_min &&
         card_max == o.card_max && even_count == o.even_count &&
         lower_bound_violations == o.lower_bound_violations && mean == o.mean && std == o.std &&
         x_min == o.x_min && x_max == o.x_max && parity_even_fraction == o.parity_even_fraction &&
         mean_theoretical == o.mean_theoretical && same_hist(hist, o.hist);
}

std::uint64_t level_seed(std::uint64_t seed, std::uint32_t n) noexcept {
  return splitmix64_mix(seed ^ (std::uint64_t{n} * SampleStream::kGolden));
}

LipschitzMap sample_map(const std::shared_ptr<const ProjectiveSpace>& space, std::uint64_t seed, std::uint64_t index) {
  return random_lipschitz(space, SampleStream(level_seed(seed, space->level()), index));
}

std::vector<std::uint64_t> sample_cards(const std::shared_ptr<const ProjectiveSpace>& space, std::uint64_t seed,
                                        std::uint64_t count, std::uint32_t workers, std::uint64_t memory_cap) {
  cell_count(space->ring(), space->dimension(), memory_cap);
  const std::uint64_t stream_seed = level_seed(seed, space->level());
  std::vector<std::uint64_t> cards(count);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;

  auto work = [&] {
    try {
      KakeyaBuilder builder(space, memory_cap);
      LipschitzMap map = LipschitzMap::zero(space);
      for (;;) {
        const std::uint64_t begin = next.fetch_add(kChunk);
        if (begin >= count) break;
        const std::uint64_t end = std::min(count, begin + kChunk);
        for (std::uint64_t i = begin; i < end; ++i) {
          random_lipschitz_into(SampleStream(stream_seed, i), map);
          cards[i] = builder.build(map);
        }
      }
    } catch (...) {
      std::lock_guard lock(failure_lock);
      if (!failure) failure = std::current_exception();
      next.store(count);
    }
  };

  const std::uint32_t threads = std::max<std::uint32_t>(1, std::min<std::uint64_t>(workers, (count + kChunk - 1) / kChunk));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::uint32_t t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& thread : pool) thread.join();
  }
  if (failure) std::rethrow_exception(failure);
  return cards;
}

bool meets_lower_bound_dim2(std::uint64_t q, std::uint32_t n, std::uint64_t card) {
  // card ((q-1) n + q + 1) >= (q+1) q^{2n}
  const BigInt lhs = big(card) * ((big(q) - 1) * n + big(q) + 1);
  return lhs >= (big(q) + 1) * pow(big(q), 2 * std::uint64_t{n});
}

SampleStats summarize(const Ring& ring, std::uint32_t d, std::uint64_t seed, std::span<const std::uint64_t> cards,
                      std::uint32_t bins) {
  if (cards.empty()) throw Error(ErrorCode::InvalidArgument, "no samples");
  SampleStats s;
  s.q = ring.p();
  s.d = d;
  s.n = ring.n();
  s.seed = seed;
  s.count = cards.size();
  s.cells = cell_count(ring, d, ~std::uint64_t{0});
  s.card_sum = 0;
  s.card_square_sum = 0;
  s.card_min = cards.front();
  s.card_max = cards.front();
  for (std::uint64_t card : cards) {
    s.card_sum += big(card);
    s.card_square_sum += big(card) * big(card);
    s.card_min = std::min(s.card_min, card);
    s.card_max = std::max(s.card_max, card);
    if (card % 2 == 0) ++s.even_count;
    if (d == 2 && !meets_lower_bound_dim2(s.q, s.n, card)) ++s.lower_bound_violations;
  }
  const double cells = static_cast<double>(s.cells);
  s.mean = s.mean_rational().get_d();
  const Rational variance = ratio(big(s.count) * s.card_square_sum - s.card_sum * s.card_sum,
                                  big(s.count) * big(s.count) * big(s.cells) * big(s.cells));
  s.std = std::sqrt(variance.get_d());
  s.x_min = static_cast<double>(s.card_min) / cells;
  s.x_max = static_cast<double>(s.card_max) / cells;
  s.parity_even_fraction = static_cast<double>(s.even_count) / static_cast<double>(s.count);
  s.mean_theoretical = expected_measure_double(s.q, d, s.n);

  std::vector<double> xs;
  xs.reserve(cards.size());
  for (std::uint64_t card : cards) xs.push_back(static_cast<double>(card) / cells);
  s.hist = histogram(xs, bins, s.mean_theoretical);
  return s;
}

std::vector<SampleStats> run_experiment(const ExperimentConfig& config) {
  config.validate();
  std::vector<SampleStats> out;
  for (std::uint32_t n = config.n_min; n <= config.n_max; ++n) {
    const Ring ring = Ring::make(config.family, config.p, n);
    cell_count(ring, config.d, config.memory_cap);
    const auto space = ProjectiveSpace::create(ring, config.d);
    const auto cards = sample_cards(space, config.seed, config.samples, config.workers, config.memory_cap);
    out.push_back(summarize(ring, config.d, config.seed, cards, config.bins));
    const SampleStats& s = out.back();
    if (config.enforce_lower_bound && s.lower_bound_violations > 0)
      throw Error(ErrorCode::InvariantViolation, std::to_string(s.lower_bound_violations) +
                                                     " samples below the dimension-2 lower bound at n = " +
                                                     std::to_string(n));
  }
  return out;
}

ExactResult exact_experiment(const std::shared_ptr<const ProjectiveSpace>& space, std::uint64_t cap) {
  OmegaEnumerator omega(space, cap);
  KakeyaBuilder builder(space);
  std::uint64_t sum = 0;
  omega.for_each([&](const LipschitzMap& map) { sum += builder.build(map); });

  ExactResult result;
  result.maps = omega.count();
  result.card_sum = big(sum);
  result.mean_card = ratio(result.card_sum, big(result.maps));
  result.mean_measure = result.mean_card / Rational(big(cell_count(space->ring(), space->dimension())));
  return result;
}

std::string format_decimal(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6f", value);
  return buffer;
}

void write_stats_csv(std::span<const SampleStats> stats, std::ostream& out, bool header) {
  if (header)
    out << "q,d,n,samples,seed,mean_empirical,std_empirical,mean_theoretical,parity_even_fraction,min_empirical,"
           "max_empirical\n";
  for (const SampleStats& s : stats)
    out << s.q << ',' << s.d << ',' << s.n << ',' << s.count << ',' << s.seed << ',' << format_decimal(s.mean) << ','
        << format_decimal(s.std) << ',' << format_decimal(s.mean_theoretical) << ','
        << format_decimal(s.parity_even_fraction) << ',' << format_decimal(s.x_min) << ','
        << format_decimal(s.x_max) << '\n';
}

void write_histogram_csv(const Histogram& hist, std::ostream& out) {
  out << "# empirical_mean=" << format_decimal(hist.empirical_mean);
  if (hist.theoretical_mean) out << " theoretical_mean=" << format_decimal(*hist.theoretical_mean);
  out << "\nbin_lower,bin_upper,density\n";
  for (const HistogramBin& bin : hist.bins)
    out << format_decimal(bin.lower) << ',' << format_decimal(bin.upper) << ',' << format_decimal(bin.density)
        << '\n';
}

}  // namespace naks
