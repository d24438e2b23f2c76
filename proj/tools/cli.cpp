#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "naks/error.hpp"
#include "naks/kakeya.hpp"
#include "naks/lipschitz.hpp"
#include "naks/montecarlo.hpp"
#include "naks/render.hpp"
#include "naks/theory.hpp"

namespace naks::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Kind { text, number };

struct Table {
  std::vector<std::string> columns;
  std::vector<Kind> kinds;
  std::vector<std::vector<std::string>> rows;

  void column(std::string name, Kind kind) {
    columns.push_back(std::move(name));
    kinds.push_back(kind);
  }
};

using Stanza = std::vector<std::pair<std::string, std::string>>;

Stanza stanza_for(const std::string& command) { return {{"version", NAKS_VERSION}, {"command", command}}; }

void write_csv(const Stanza& stanza, const Table& table, std::ostream& out) {
  out << "# naks";
  for (const auto& [key, value] : stanza) out << ' ' << key << '=' << value;
  out << '\n';
  for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << table.columns[c];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
    out << '\n';
  }
}

void write_json(const Stanza& stanza, const Table& table, std::ostream& out) {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  for (const auto& [key, value] : stanza) meta[key] = value;
  doc["meta"] = meta;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json record = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c].empty())
        record[table.columns[c]] = nullptr;
      else if (table.kinds[c] == Kind::number)
        record[table.columns[c]] = nlohmann::ordered_json::parse(row[c]);
      else
        record[table.columns[c]] = row[c];
    }
    doc["rows"].push_back(std::move(record));
  }
  out << doc.dump(2) << '\n';
}

void emit(const std::string& format, const Stanza& stanza, const Table& table, const std::string& path,
          std::ostream& out) {
  auto write = [&](std::ostream& stream) {
    if (format == "json")
      write_json(stanza, table, stream);
    else
      write_csv(stanza, table, stream);
  };
  if (path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorCode::IoError, "cannot open " + path);
  write(file);
  if (!file) throw Error(ErrorCode::IoError, "write failed: " + path);
}

std::string str(std::uint64_t value) { return std::to_string(value); }

std::uint32_t default_workers() {
  if (const char* env = std::getenv("NAKS_THREADS")) {
    char* end = nullptr;
    const unsigned long value = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && value >= 1) return static_cast<std::uint32_t>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Flags shared by several subcommands.
struct Params {
  std::string family = "padic";
  std::uint64_t p = 2;
  std::uint32_t dim = 2;
  std::uint32_t n = 0;
  std::uint32_t n_min = 1;
  std::uint32_t n_max = 0;
  std::string format = "csv";
  std::string out_path;

  CLI::Option* n_opt = nullptr;
  CLI::Option* n_min_opt = nullptr;
  CLI::Option* n_max_opt = nullptr;

  void add_family(CLI::App* app) {
    app->add_option("--family", family, "Ring family")->check(CLI::IsMember({"padic", "series"}));
  }
  void add_p(CLI::App* app, const char* help) { app->add_option("--p", p, help); }
  void add_dim(CLI::App* app) { app->add_option("--dim", dim, "Dimension d of the ambient space"); }
  void add_single_n(CLI::App* app) { n_opt = app->add_option("--n", n, "Level n")->required(); }
  void add_n_range(CLI::App* app) {
    n_opt = app->add_option("--n", n, "Single level n");
    n_min_opt = app->add_option("--n-min", n_min, "First level of the range");
    n_max_opt = app->add_option("--n-max", n_max, "Last level of the range");
    n_min_opt->excludes(n_opt);
    n_max_opt->excludes(n_opt);
  }
  void add_output(CLI::App* app) {
    app->add_option("--out", out_path, "Output file (default stdout)");
    app->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  }

  void check_q() const {
    if (p < 2) throw UsageError("--p must be >= 2");
  }
  void check_prime() const {
    if (p > 0xffffffffULL || !is_prime(p)) throw UsageError("--p must be a prime for this command");
  }
  void check_dim() const {
    if (dim < 2) throw UsageError("--dim must be >= 2");
  }
  void check_n() const {
    if (n < 1) throw UsageError("--n must be >= 1");
  }
  void resolve_range() {
    if (n_opt->count() > 0) {
      check_n();
      n_min = n_max = n;
      return;
    }
    if (n_max_opt->count() == 0) throw UsageError("give --n or --n-max");
    if (n_min < 1) throw UsageError("--n-min must be >= 1");
    if (n_min > n_max) throw UsageError("--n-min exceeds --n-max");
  }
  std::string range_text() const { return n_min == n_max ? str(n_min) : str(n_min) + ".." + str(n_max); }
};

// Exact u_n has about (d-1) log2(q) q^{(d-1)n} bits in its denominator.
bool exact_theory_feasible(std::uint64_t q, std::uint32_t d, std::uint32_t n) {
  const double a = std::pow(static_cast<double>(q), d - 1.0);
  const double bits = (d - 1.0) * std::log2(static_cast<double>(q)) * std::pow(a, n);
  return bits <= static_cast<double>(1u << 24);
}

int cmd_theory(Params& params, std::ostream& out) {
  params.check_q();
  params.check_dim();
  params.resolve_range();
  const std::uint64_t q = params.p;
  const std::uint32_t d = params.dim;

  std::uint32_t exact_limit = 0;
  while (exact_limit < params.n_max && exact_theory_feasible(q, d, exact_limit + 1)) ++exact_limit;
  const auto u = u_sequence_prefix(q, d, exact_limit);
  const Rational a(pow(BigInt(static_cast<unsigned long>(q)), d - 1));
  const std::uint64_t p_lines = projective_line_count(q, d).get_ui();
  const std::string asymptotic = to_string(asymptotic_constant(q, d));

  Table table;
  for (const char* name : {"q", "d", "n"}) table.column(name, Kind::number);
  table.column("u_n", Kind::number);
  table.column("u_prime_n", Kind::number);
  table.column("expected_measure_rational", Kind::text);
  table.column("expected_measure_decimal", Kind::number);
  table.column("lower_bound_dim2", Kind::text);
  table.column("asymptotic_constant", Kind::text);

  for (std::uint32_t n = params.n_min; n <= params.n_max; ++n) {
    std::vector<std::string> row{str(q), str(d), str(n)};
    if (n <= exact_limit) {
      const Rational e = 1 - pow(1 - u[n - 1] / a, p_lines);
      row.push_back(to_decimal(u[n]));
      row.push_back(to_decimal(e));
      row.push_back(to_string(e));
      row.push_back(to_decimal(e));
    } else {
      const std::string e = format_decimal(expected_measure_double(q, d, n));
      row.push_back(format_decimal(u_sequence_double(q, d, n)));
      row.push_back(e);
      row.push_back("");
      row.push_back(e);
    }
    row.push_back(d == 2 ? to_string(lower_bound_dim2(q, n)) : "");
    row.push_back(asymptotic);
    table.rows.push_back(std::move(row));
  }

  Stanza stanza = stanza_for("theory");
  stanza.insert(stanza.end(), {{"q", str(q)}, {"d", str(d)}, {"n", params.range_text()}});
  emit(params.format, stanza, table, params.out_path, out);
  return kExitOk;
}

std::string suffixed(const std::string& path, std::uint32_t n) {
  const std::filesystem::path base(path);
  auto name = base.stem().string() + "_n" + std::to_string(n) + base.extension().string();
  return (base.parent_path() / name).string();
}

struct SampleFlags {
  std::uint64_t samples = kDefaultSamples;
  std::uint64_t seed = 0;
  std::uint32_t workers = default_workers();
  std::uint32_t bins = kDefaultBins;
  std::string hist_out;
  std::string save_set;
  std::uint64_t sample_index = 0;
};

int cmd_sample(Params& params, const SampleFlags& flags, std::ostream& out, std::ostream& err) {
  params.check_prime();
  params.check_dim();
  params.resolve_range();
  if (flags.samples < 1) throw UsageError("--samples must be >= 1");
  if (flags.bins < 1) throw UsageError("--bins must be >= 1");
  if (flags.workers < 1) throw UsageError("--workers must be >= 1");
  if (!flags.save_set.empty() && params.n_min != params.n_max) throw UsageError("--save-set needs a single --n");

  ExperimentConfig config;
  config.family = parse_family(params.family);
  config.p = static_cast<std::uint32_t>(params.p);
  config.d = params.dim;
  config.n_min = params.n_min;
  config.n_max = params.n_max;
  config.samples = flags.samples;
  config.seed = flags.seed;
  config.workers = flags.workers;
  config.bins = flags.bins;
  config.enforce_lower_bound = false;
  const auto stats = run_experiment(config);

  Stanza stanza = stanza_for("sample");
  stanza.insert(stanza.end(), {{"family", params.family},
                               {"p", str(params.p)},
                               {"d", str(params.dim)},
                               {"n", params.range_text()},
                               {"samples", str(flags.samples)},
                               {"seed", str(flags.seed)},
                               {"workers", str(flags.workers)},
                               {"bins", str(flags.bins)}});

  Table table;
  for (const char* name : {"q", "d", "n", "samples", "seed"}) table.column(name, Kind::number);
  for (const char* name : {"mean_empirical", "std_empirical", "mean_theoretical", "parity_even_fraction",
                           "min_empirical", "max_empirical"})
    table.column(name, Kind::number);
  table.column("mean_rational", Kind::text);
  table.column("lower_bound_violations", Kind::number);
  for (const SampleStats& s : stats)
    table.rows.push_back({str(s.q), str(s.d), str(s.n), str(s.count), str(s.seed), format_decimal(s.mean),
                          format_decimal(s.std), format_decimal(s.mean_theoretical),
                          format_decimal(s.parity_even_fraction), format_decimal(s.x_min), format_decimal(s.x_max),
                          to_string(s.mean_rational()), str(s.lower_bound_violations)});
  emit(params.format, stanza, table, params.out_path, out);

  if (!flags.hist_out.empty()) {
    for (const SampleStats& s : stats) {
      Table hist;
      for (const char* name : {"bin_lower", "bin_upper", "density"}) hist.column(name, Kind::number);
      for (const HistogramBin& bin : s.hist.bins)
        hist.rows.push_back(
            {format_decimal(bin.lower), format_decimal(bin.upper), format_decimal(bin.density)});
      Stanza meta = stanza;
      meta.emplace_back("level", str(s.n));
      meta.emplace_back("empirical_mean", format_decimal(s.hist.empirical_mean));
      meta.emplace_back("theoretical_mean", format_decimal(s.hist.theoretical_mean.value_or(0)));
      const std::string path = stats.size() == 1 ? flags.hist_out : suffixed(flags.hist_out, s.n);
      emit(params.format, meta, hist, path, out);
    }
  }

  if (!flags.save_set.empty()) {
    const auto space = ProjectiveSpace::create(Ring::make(config.family, config.p, params.n_min), config.d);
    const KakeyaSet set = build_kakeya(sample_map(space, flags.seed, flags.sample_index));
    std::ofstream file(flags.save_set, std::ios::binary);
    if (!file) throw Error(ErrorCode::IoError, "cannot open " + flags.save_set);
    write_set(set, file);
  }

  std::uint64_t violations = 0;
  for (const SampleStats& s : stats) violations += s.lower_bound_violations;
  if (violations > 0) {
    err << "naks: " << violations << " samples violate the dimension-2 lower bound\n";
    return kExitInvariant;
  }
  return kExitOk;
}

int cmd_exact(Params& params, std::uint64_t cap, std::ostream& out, std::ostream& err) {
  params.check_prime();
  params.check_dim();
  params.check_n();
  const Ring ring = Ring::make(parse_family(params.family), params.p, params.n);
  const auto space = ProjectiveSpace::create(ring, params.dim);
  const ExactResult result = exact_experiment(space, cap);
  const Rational theory = expected_measure(params.p, params.dim, params.n);
  const bool matches = result.mean_measure == theory;

  Table table;
  table.column("family", Kind::text);
  for (const char* name : {"p", "d", "n", "maps"}) table.column(name, Kind::number);
  for (const char* name : {"card_sum", "mean_card", "mean_measure"}) table.column(name, Kind::text);
  table.column("mean_measure_decimal", Kind::number);
  table.column("expected_measure", Kind::text);
  table.column("matches_theory", Kind::text);
  table.rows.push_back({params.family, str(params.p), str(params.dim), str(params.n), str(result.maps),
                        to_string(result.card_sum), to_string(result.mean_card), to_string(result.mean_measure),
                        to_decimal(result.mean_measure), to_string(theory), matches ? "true" : "false"});

  Stanza stanza = stanza_for("exact");
  stanza.insert(stanza.end(), {{"family", params.family},
                               {"p", str(params.p)},
                               {"d", str(params.dim)},
                               {"n", str(params.n)},
                               {"cap", str(cap)}});
  emit(params.format, stanza, table, params.out_path, out);
  if (!matches) {
    err << "naks: enumeration mean differs from the closed form\n";
    return kExitInvariant;
  }
  return kExitOk;
}

int cmd_heights(Params& params, std::ostream& out, std::ostream& err) {
  params.check_q();
  params.check_dim();
  params.check_n();
  const std::uint64_t q = params.p;
  const std::uint32_t d = params.dim;
  const std::uint32_t n = params.n;

  const Rational plain = weighted_height_sum(q, d, n, false);
  const Rational recurrence = u_sequence(q, d, n);
  const Rational scale = ratio(projective_line_count(q, d), pow(BigInt(static_cast<unsigned long>(q)), d - 1));
  const Rational modified = weighted_height_sum(q, d, n, true) * scale;
  const Rational expected = expected_measure(q, d, n);
  const bool plain_ok = plain == recurrence;
  const bool modified_ok = modified == expected;

  Table table;
  for (const char* name : {"q", "d", "n"}) table.column(name, Kind::number);
  for (const char* name : {"u_n_height_sum", "u_n_recurrence", "u_n_match", "u_prime_n_height_sum",
                           "u_prime_n_recurrence", "u_prime_n_match"})
    table.column(name, Kind::text);
  table.column("u_n_decimal", Kind::number);
  table.column("u_prime_n_decimal", Kind::number);
  table.rows.push_back({str(q), str(d), str(n), to_string(plain), to_string(recurrence), plain_ok ? "true" : "false",
                        to_string(modified), to_string(expected), modified_ok ? "true" : "false",
                        to_decimal(recurrence), to_decimal(expected)});

  Stanza stanza = stanza_for("heights");
  stanza.insert(stanza.end(), {{"q", str(q)}, {"d", str(d)}, {"n", str(n)}});
  emit(params.format, stanza, table, params.out_path, out);
  if (!plain_ok || !modified_ok) {
    err << "naks: height sum differs from the recurrence\n";
    return kExitInvariant;
  }
  return kExitOk;
}

int cmd_bound(Params& params, std::uint32_t ell, std::ostream& out) {
  params.check_q();
  params.check_n();
  if (ell > params.n) throw UsageError("--ell must lie in [0, n]");
  const std::uint64_t q = params.p;
  const Rational dim2 = lower_bound_dim2(q, params.n);
  const Rational torsion = lower_bound_torsion(q, params.n, ell);

  Table table;
  for (const char* name : {"q", "n", "ell"}) table.column(name, Kind::number);
  table.column("lower_bound_dim2", Kind::text);
  table.column("lower_bound_dim2_decimal", Kind::number);
  table.column("lower_bound_torsion", Kind::text);
  table.column("lower_bound_torsion_decimal", Kind::number);
  table.column("expected_measure_dim2", Kind::number);
  table.rows.push_back({str(q), str(params.n), str(ell), to_string(dim2), to_decimal(dim2), to_string(torsion),
                        to_decimal(torsion), format_decimal(expected_measure_double(q, 2, params.n))});

  Stanza stanza = stanza_for("bound");
  stanza.insert(stanza.end(), {{"q", str(q)}, {"n", str(params.n)}, {"ell", str(ell)}});
  emit(params.format, stanza, table, params.out_path, out);
  return kExitOk;
}

struct RenderFlags {
  std::string input;
  std::string image_out;
  std::uint64_t seed = 0;
  std::uint64_t sample_index = 0;
};

int cmd_render(Params& params, const RenderFlags& flags, CLI::App* app, std::ostream& out) {
  if (flags.image_out.empty()) throw UsageError("render needs --out");
  std::optional<KakeyaSet> set;
  std::optional<std::uint64_t> seed;
  Stanza stanza = stanza_for("render");
  if (!flags.input.empty()) {
    for (const char* name : {"--family", "--p", "--dim", "--n", "--seed", "--sample-index"})
      if (app->get_option(name)->count() > 0) throw UsageError(std::string(name) + " conflicts with --input");
    std::ifstream in(flags.input, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + flags.input);
    if (std::filesystem::path(flags.input).extension() == ".csv")
      set = build_kakeya(read_map_csv(in));
    else
      set = read_set(in);
    stanza.emplace_back("input", flags.input);
  } else {
    params.check_prime();
    params.check_dim();
    params.check_n();
    const auto space = ProjectiveSpace::create(Ring::make(parse_family(params.family), params.p, params.n), params.dim);
    set = build_kakeya(sample_map(space, flags.seed, flags.sample_index));
    seed = flags.seed;
    stanza.insert(stanza.end(), {{"family", params.family},
                                 {"p", str(params.p)},
                                 {"d", str(params.dim)},
                                 {"n", str(params.n)},
                                 {"seed", str(flags.seed)},
                                 {"sample_index", str(flags.sample_index)}});
  }

  if (set->dimension() == 2) {
    write_pgm(render_2d(*set, seed), flags.image_out);
  } else if (set->dimension() == 3) {
    export_voxels(*set, flags.image_out);
  } else {
    throw Error(ErrorCode::WrongDimension, "render supports d = 2 and d = 3 only");
  }

  Table table;
  table.column("output", Kind::text);
  for (const char* name : {"p", "n", "d", "card"}) table.column(name, Kind::number);
  table.column("measure", Kind::text);
  table.column("measure_decimal", Kind::number);
  const Rational x = measure(*set);
  table.rows.push_back({flags.image_out, str(set->ring().p()), str(set->ring().n()), str(set->dimension()),
                        str(set->card()), to_string(x), to_decimal(x)});
  emit(params.format, stanza, table, "", out);
  return kExitOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvariantViolation:
    case ErrorCode::NonIntegralCount:
      return kExitInvariant;
    case ErrorCode::NonPrimeModulus:
    case ErrorCode::InvalidLevel:
    case ErrorCode::InvalidArgument:
    case ErrorCode::ParseError:
    case ErrorCode::IoError:
    case ErrorCode::EnumerationTooLarge:
    case ErrorCode::SetTooLarge:
    case ErrorCode::TooManySubsets:
    case ErrorCode::SumExplosion:
    case ErrorCode::WrongDimension:
    case ErrorCode::NotOnSphere:
      return kExitUsage;
    default:
      return kExitInternal;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random non-archimedean Kakeya sets", "naks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", NAKS_VERSION);

  Params theory_params, sample_params, exact_params, heights_params, bound_params, render_params;
  SampleFlags sample_flags;
  RenderFlags render_flags;
  std::uint64_t exact_cap = kDefaultEnumerationCap;
  std::uint32_t ell = 0;

  auto* theory = app.add_subcommand("theory", "Closed-form E[X_n] table");
  theory_params.add_p(theory, "Residue field size q");
  theory_params.add_dim(theory);
  theory_params.add_n_range(theory);
  theory_params.add_output(theory);

  auto* sample = app.add_subcommand("sample", "Monte Carlo estimate of E[X_n] and sigma[X_n]");
  sample_params.add_family(sample);
  sample_params.add_p(sample, "Residue characteristic p (prime)");
  sample_params.add_dim(sample);
  sample_params.add_n_range(sample);
  sample_params.add_output(sample);
  sample->add_option("--samples", sample_flags.samples, "Samples per level");
  sample->add_option("--seed", sample_flags.seed, "Random seed");
  sample->add_option("--workers", sample_flags.workers, "Worker threads (default $NAKS_THREADS or all cores)");
  sample->add_option("--bins", sample_flags.bins, "Histogram bins");
  sample->add_option("--hist-out", sample_flags.hist_out, "Histogram output file");
  sample->add_option("--save-set", sample_flags.save_set, "Write the Kakeya set of one sample (binary)");
  sample->add_option("--sample-index", sample_flags.sample_index, "Sample written by --save-set");

  auto* exact = app.add_subcommand("exact", "Exact E[X_n] by enumerating every 1-Lipschitz map");
  exact_params.add_family(exact);
  exact_params.add_p(exact, "Residue characteristic p (prime)");
  exact_params.add_dim(exact);
  exact_params.add_single_n(exact);
  exact_params.add_output(exact);
  exact->add_option("--cap", exact_cap, "Refuse to enumerate more maps than this");

  auto* heights = app.add_subcommand("heights", "u_n and u'_n from weighted height-function sums");
  heights_params.add_p(heights, "Residue field size q");
  heights_params.add_dim(heights);
  heights_params.add_single_n(heights);
  heights_params.add_output(heights);

  auto* bound = app.add_subcommand("bound", "Lower bounds for X_n in dimension 2");
  bound_params.add_p(bound, "Residue field size q");
  bound_params.add_single_n(bound);
  bound_params.add_output(bound);
  bound->add_option("--ell", ell, "Segment length exponent");

  auto* render = app.add_subcommand("render", "PGM image (d = 2) or voxel CSV (d = 3) of a Kakeya set");
  render_params.add_family(render);
  render_params.add_p(render, "Residue characteristic p (prime)");
  render_params.add_dim(render);
  render_params.n_opt = render->add_option("--n", render_params.n, "Level n");
  render->add_option("--format", render_params.format, "Summary format")->check(CLI::IsMember({"csv", "json"}));
  render->add_option("--input", render_flags.input, "Binary set file or map CSV");
  render->add_option("--out", render_flags.image_out, "Image or voxel output path");
  render->add_option("--seed", render_flags.seed, "Random seed when sampling");
  render->add_option("--sample-index", render_flags.sample_index, "Sample index when sampling");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (theory->parsed()) return cmd_theory(theory_params, out);
    if (sample->parsed()) return cmd_sample(sample_params, sample_flags, out, err);
    if (exact->parsed()) return cmd_exact(exact_params, exact_cap, out, err);
    if (heights->parsed()) return cmd_heights(heights_params, out, err);
    if (bound->parsed()) return cmd_bound(bound_params, ell, out);
    if (render->parsed()) return cmd_render(render_params, render_flags, render, out);
    return kExitInternal;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << NAKS_VERSION << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "naks: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "naks: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "naks: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "naks: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace naks::cli
