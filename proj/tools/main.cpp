// cohsim command-line front end: exact tables for the classical and
// quantum versions of the parity communication game, setting sweeps,
// seeded trial runs, and the consolidated reproduce check.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cohsim/bloch.hpp"
#include "cohsim/errors.hpp"
#include "cohsim/game.hpp"
#include "cohsim/reproduce.hpp"
#include "cohsim/scheme_one.hpp"
#include "cohsim/scheme_two.hpp"
#include "cohsim/sweep.hpp"
#include "cohsim/trials.hpp"

namespace {

using cohsim::BlochObservable;
using cohsim::ConditionalDistribution;
using cohsim::Statistics;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitDataError = 1;
constexpr int kExitUsage = 2;

json table_json(const ConditionalDistribution& dist) {
  json rows = json::array();
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      json row = json::array();
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) row.push_back(dist.p(a, b, x, y));
      rows.push_back(row);
    }
  }
  return rows;
}

json interference_json(const ConditionalDistribution& dist) {
  const auto report = dist.coherence_report();
  return json{{"I00", report.interference[0]},
              {"I01", report.interference[1]},
              {"I10", report.interference[2]},
              {"I11", report.interference[3]}};
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw cohsim::ConfigError("cannot open output file: " + output_path);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

Statistics parse_stats(const std::string& name) {
  if (name == "boson") return Statistics::Boson;
  if (name == "fermion") return Statistics::Fermion;
  throw cohsim::ValidationError("statistics must be 'boson' or 'fermion', got '" + name + "'");
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("COHSIM_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 424242;
}

struct AngleOptions {
  double theta_a = 0.0, phi_a = 0.0, theta_b = 0.0, phi_b = 0.0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--theta-a", theta_a, "Polar angle of Alice's observable (radians)")
        ->required();
    cmd->add_option("--phi-a", phi_a, "Azimuth of Alice's observable (radians)")->required();
    cmd->add_option("--theta-b", theta_b, "Polar angle of Bob's observable (radians)")
        ->required();
    cmd->add_option("--phi-b", phi_b, "Azimuth of Bob's observable (radians)")->required();
  }
  BlochObservable obs_a() const { return {theta_a, phi_a}; }
  BlochObservable obs_b() const { return {theta_b, phi_b}; }
  json to_json() const {
    return json{{"theta_a", theta_a}, {"phi_a", phi_a}, {"theta_b", theta_b}, {"phi_b", phi_b}};
  }
};

int run_classical(bool enumerate, bool detection, double lambda_sa, const std::string& format,
                  const std::string& output) {
  if (enumerate) {
    json strategies = json::array();
    const auto all = cohsim::enumerate_deterministic_strategies();
    for (const auto& s : all) {
      const auto dist = cohsim::strategy_distribution(s);
      const bool via_a = s.lambda_sa == 1.0;
      const auto& active = via_a ? s.at_a : s.at_b;
      strategies.push_back(json{{"branch", via_a ? "S-A" : "S-B"},
                                {"a_map", {active.a[0], active.a[1]}},
                                {"b_map", {active.b[0], active.b[1]}},
                                {"p_win", dist.win_probability()},
                                {"interference", interference_json(dist)}});
    }
    json doc{{"schema_version", 1},
             {"command", "classical"},
             {"strategy_count", strategies.size()},
             {"strategies", strategies},
             {"provenance",
              {{"p_win", "success sum over the eight winning entries, uniform inputs"},
               {"interference", "signed sum over blocker settings per outcome pair"}}}};
    emit(doc.dump(2), output);
    return kExitOk;
  }
  if (!detection) {
    throw cohsim::ValidationError("classical needs --enumerate or --detection");
  }
  const auto dist = cohsim::strategy_distribution(cohsim::detection_strategy(lambda_sa));
  if (format == "csv") {
    emit(dist.to_csv_string(), output);
    return kExitOk;
  }
  json doc{{"schema_version", 1},
           {"command", "classical"},
           {"strategy", "detection"},
           {"lambda_sa", lambda_sa},
           {"p", table_json(dist)},
           {"p_win", dist.win_probability()},
           {"interference", interference_json(dist)},
           {"provenance",
            {{"p", "one-way-signaling mixture of the two detection branches"},
             {"p_win", "success sum over the eight winning entries, uniform inputs"}}}};
  emit(doc.dump(2), output);
  return kExitOk;
}

int run_scheme1(const std::string& stats_name, const AngleOptions& angles,
                const std::string& format, const std::string& output) {
  const Statistics stats = parse_stats(stats_name);
  const cohsim::SchemeOneConfig config{stats, angles.obs_a(), angles.obs_b()};
  const auto dist = cohsim::measurement_distribution(config);
  if (format == "csv") {
    emit(dist.to_csv_string(), output);
    return kExitOk;
  }
  json doc{{"schema_version", 1},
           {"command", "scheme1"},
           {"stats", cohsim::to_string(stats)},
           {"angles", angles.to_json()},
           {"p", table_json(dist)},
           {"p_win_simulated", dist.win_probability()},
           {"p_win_closed_form", cohsim::win_probability_closed_form(config)},
           {"interference", interference_json(dist)},
           {"provenance",
            {{"p", "blocker encoding, one-per-side post-selection, projective readout; "
                   "non-post-selected rounds output independent uniform bits"},
             {"p_win_closed_form",
              "1/2 +- (1/32)(<0|sA|1><1|sB|0> + <1|sA|0><0|sB|1>), sign by statistics"}}}};
  emit(doc.dump(2), output);
  return kExitOk;
}

int run_scheme2(const std::string& stats_name, double s0, double s1, double s1_phase,
                const AngleOptions& angles, const std::string& format,
                const std::string& output) {
  const Statistics stats = parse_stats(stats_name);
  const std::string note = cohsim::assert_physicality(stats);
  // The pair is treated as a direction and normalized, so rounded inputs
  // like 0.7071068 mean the balanced source.
  const double norm = std::hypot(s0, s1);
  if (norm == 0.0) throw cohsim::ValidationError("s0 and s1 cannot both be zero");
  const cohsim::SourceAmplitudes source(s0 / norm, std::polar(s1 / norm, s1_phase));
  const auto obs_a = angles.obs_a();
  const auto obs_b = angles.obs_b();
  const auto dist = cohsim::measurement_distribution(source, obs_a, obs_b);
  if (format == "csv") {
    emit(dist.to_csv_string(), output);
    return kExitOk;
  }
  json doc{{"schema_version", 1},
           {"command", "scheme2"},
           {"stats", cohsim::to_string(stats)},
           {"s0", source.s0.real()},
           {"s1", std::abs(source.s1)},
           {"s1_phase", s1_phase},
           {"angles", angles.to_json()},
           {"p_table", table_json(dist)},
           {"interference", interference_json(dist)},
           {"p_win_pipeline", dist.win_probability()},
           {"p_win_closed_form", cohsim::win_probability_closed_form(source, obs_a, obs_b)},
           {"physicality_note", note},
           {"provenance",
            {{"p_table", "trace of the blocked state against the projector pair"},
             {"p_win_closed_form",
              "1/2 + (1/8)(s0 s1* <0|sA|1><1|sB|0> + conjugate)"}}}};
  emit(doc.dump(2), output);
  return kExitOk;
}

int run_sweep(int scheme, const std::string& stats_name, std::size_t resolution,
              unsigned threads, const std::string& grid_csv, const std::string& output) {
  cohsim::SweepResult result;
  ConditionalDistribution at_best = ConditionalDistribution::uniform();
  if (scheme == 1) {
    const Statistics stats = parse_stats(stats_name);
    result = cohsim::sweep_scheme_one(stats, resolution, threads);
    const cohsim::SchemeOneConfig best{
        stats, BlochObservable::wrapped(result.best_params[0], result.best_params[1]),
        BlochObservable::wrapped(result.best_params[2], result.best_params[3])};
    at_best = cohsim::measurement_distribution(best);
  } else if (scheme == 2) {
    result = cohsim::sweep_scheme_two(resolution, threads);
    const double alpha = result.best_params[0];
    const double delta = result.best_params[1];
    const cohsim::SourceAmplitudes source(std::cos(alpha),
                                          std::polar(std::sin(alpha), delta));
    at_best = cohsim::measurement_distribution(
        source, BlochObservable::wrapped(result.best_params[2], result.best_params[3]),
        BlochObservable::wrapped(result.best_params[4], result.best_params[5]));
  } else {
    throw cohsim::ValidationError("scheme must be 1 or 2");
  }

  if (!grid_csv.empty()) {
    // Full grid dump for external plotting. Guarded, the product grid
    // grows fast.
    const auto axes = scheme == 1 ? cohsim::scheme_one_axes() : cohsim::scheme_two_axes();
    double total = 1.0;
    for (std::size_t k = 0; k < axes.size(); ++k) total *= static_cast<double>(resolution);
    if (total > 1e7) {
      throw cohsim::ConfigError("grid dump would exceed 1e7 rows; lower the resolution");
    }
    std::ofstream out(grid_csv, std::ios::binary);
    if (!out) throw cohsim::ConfigError("cannot open grid CSV file: " + grid_csv);
    out.precision(17);
    for (const auto& axis : axes) out << axis.name << ',';
    out << "p_win\n";
    std::vector<std::size_t> idx(axes.size(), 0);
    std::vector<std::vector<double>> grids;
    for (const auto& axis : axes) grids.push_back(cohsim::axis_grid(axis, resolution));
    const Statistics grid_stats = scheme == 1 ? parse_stats(stats_name) : Statistics::Boson;
    bool done = false;
    while (!done) {
      double value;
      if (scheme == 1) {
        const cohsim::SchemeOneConfig config{
            grid_stats, BlochObservable::wrapped(grids[0][idx[0]], grids[1][idx[1]]),
            BlochObservable::wrapped(grids[2][idx[2]], grids[3][idx[3]])};
        value = cohsim::win_probability_closed_form(config);
      } else {
        const cohsim::SourceAmplitudes source(
            std::cos(grids[0][idx[0]]), std::polar(std::sin(grids[0][idx[0]]), grids[1][idx[1]]));
        value = cohsim::win_probability_closed_form(
            source, BlochObservable::wrapped(grids[2][idx[2]], grids[3][idx[3]]),
            BlochObservable::wrapped(grids[4][idx[4]], grids[5][idx[5]]));
      }
      for (std::size_t k = 0; k < idx.size(); ++k) out << grids[k][idx[k]] << ',';
      out << value << '\n';
      std::size_t k = idx.size();
      done = true;
      while (k > 0) {
        --k;
        if (++idx[k] < grids[k].size()) {
          done = false;
          break;
        }
        idx[k] = 0;
      }
    }
  }

  json params = json::object();
  for (std::size_t k = 0; k < result.axis_names.size(); ++k) {
    params[result.axis_names[k]] = result.best_params[k];
  }
  json doc{{"schema_version", 1},
           {"command", "sweep"},
           {"scheme", scheme},
           {"resolution", result.grid_resolution},
           {"evaluations", result.evaluations},
           {"best_params", params},
           {"best_value", result.best_value},
           {"p_win_table_at_best", table_json(at_best)},
           {"provenance",
            {{"best_value", "exhaustive closed-form win probability over the setting grid"}}}};
  if (scheme == 1) doc["stats"] = stats_name;
  emit(doc.dump(2), output);
  return kExitOk;
}

int run_trials(const std::string& dist_file, const std::string& preset, std::size_t n,
               std::uint64_t seed, double alpha, const std::string& log_csv,
               const std::string& output) {
  std::optional<ConditionalDistribution> dist;
  if (!dist_file.empty()) {
    std::ifstream in(dist_file, std::ios::binary);
    if (!in) throw cohsim::ConfigError("cannot open distribution file: " + dist_file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    if (dist_file.size() >= 4 && dist_file.substr(dist_file.size() - 4) == ".csv") {
      dist = ConditionalDistribution::from_csv_string(text);
    } else {
      dist = ConditionalDistribution::from_json_string(text);
    }
  } else if (preset == "scheme1-optimal") {
    dist = cohsim::measurement_distribution(cohsim::SchemeOneConfig{
        Statistics::Boson, BlochObservable::sigma_x(), BlochObservable::sigma_x()});
  } else if (preset == "scheme2-optimal") {
    dist = cohsim::measurement_distribution(
        cohsim::SourceAmplitudes(1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)),
        BlochObservable::sigma_x(), BlochObservable::sigma_x());
  } else if (preset == "classical-detection") {
    dist = cohsim::strategy_distribution(cohsim::detection_strategy(0.5));
  } else if (!preset.empty()) {
    throw cohsim::ValidationError("unknown preset: " + preset);
  } else {
    throw cohsim::ValidationError("trials needs --dist or --preset");
  }

  const cohsim::TrialLog log = cohsim::simulate_game(*dist, n, seed);
  const cohsim::SignificanceReport report = cohsim::significance(log, alpha);

  if (!log_csv.empty()) {
    std::ofstream out(log_csv, std::ios::binary);
    if (!out) throw cohsim::ConfigError("cannot open log CSV file: " + log_csv);
    cohsim::write_csv(log, out);
  }

  json doc{{"schema_version", 1},
           {"command", "trials"},
           {"seed", log.seed()},
           {"n", report.n},
           {"f_n", report.f_n},
           {"epsilon", report.epsilon},
           {"bound", report.bound},
           {"bound_raw", report.bound_raw},
           {"log10_bound_raw", report.log10_bound_raw},
           {"alpha", report.alpha},
           {"rejected", report.rejected},
           {"provenance",
            {{"bound", "two-sided tail bound 2 exp(-2 n epsilon^2) on classical play"},
             {"f_n", "relative frequency of rounds with a xor b = x xor y"}}}};
  emit(doc.dump(2), output);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulator and verification suite for the vacuum-coherence parity game"};
  app.require_subcommand(1);
  app.fallthrough();  // --output / --format may follow the subcommand

  // classical
  auto* classical = app.add_subcommand("classical", "Classical one-way-signaling strategies");
  bool enumerate = false;
  bool detection = false;
  double lambda_sa = 0.5;
  classical->add_flag("--enumerate", enumerate, "List all 32 deterministic strategies");
  classical->add_flag("--detection", detection, "The detect-and-report strategy");
  classical->add_option("--lambda-sa", lambda_sa, "Weight of the carrier-to-Alice branch");

  // scheme1
  auto* scheme1 = app.add_subcommand("scheme1", "Shared-ancilla scheme (both statistics)");
  std::string s1_stats = "boson";
  AngleOptions s1_angles;
  scheme1->add_option("--stats", s1_stats, "boson or fermion");
  s1_angles.attach(scheme1);

  // scheme2
  auto* scheme2 = app.add_subcommand("scheme2", "Single-particle scheme (bosons only)");
  std::string s2_stats = "boson";
  double s0 = 0.0, s1_mag = 0.0, s1_phase = 0.0;
  AngleOptions s2_angles;
  scheme2->add_option("--stats", s2_stats, "boson or fermion (fermions are refused)");
  scheme2->add_option("--s0", s0, "Amplitude of the particle-to-Alice branch")->required();
  scheme2->add_option("--s1", s1_mag, "Amplitude of the particle-to-Bob branch")->required();
  scheme2->add_option("--s1-phase", s1_phase, "Relative phase of s1 (radians)");
  s2_angles.attach(scheme2);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Exhaustive setting sweep");
  int sweep_scheme = 1;
  std::string sweep_stats = "boson";
  std::size_t resolution = 37;
  unsigned threads = 0;
  std::string grid_csv;
  sweep->add_option("--scheme", sweep_scheme, "1 or 2")->required();
  sweep->add_option("--stats", sweep_stats, "Statistics for scheme 1");
  sweep->add_option("--resolution", resolution, "Grid points per parameter");
  sweep->add_option("--threads", threads, "Worker threads (0 = hardware)");
  sweep->add_option("--grid-csv", grid_csv, "Optional CSV dump of the whole grid");

  // trials
  auto* trials = app.add_subcommand("trials", "Seeded Monte Carlo game rounds");
  std::string dist_file, preset, log_csv;
  std::size_t n = 100000;
  std::uint64_t seed = default_seed();
  double alpha = 0.01;
  trials->add_option("--dist", dist_file, "Distribution file (JSON, or CSV by extension)");
  trials->add_option("--preset", preset,
                     "scheme1-optimal, scheme2-optimal or classical-detection");
  trials->add_option("--n", n, "Number of rounds");
  trials->add_option("--seed", seed, "RNG seed (default from COHSIM_SEED or 424242)");
  trials->add_option("--alpha", alpha, "Rejection threshold for the significance flag");
  trials->add_option("--log-csv", log_csv, "Optional CSV dump of the round log");

  // reproduce
  auto* reproduce = app.add_subcommand("reproduce", "Recompute and check every headline number");
  std::uint64_t rep_seed = default_seed();
  std::string tamper;
  reproduce->add_option("--seed", rep_seed, "Seed for the significance demonstration");
  reproduce->add_option("--tamper", tamper, "Perturb one claim id (testing hook)")
      ->group("");  // hidden

  std::string output;
  std::string format = "json";
  app.add_option("--output,-o", output, "Write the report here instead of stdout");
  app.add_option("--format", format, "json or csv (csv only for table outputs)")
      ->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (classical->parsed()) {
      return run_classical(enumerate, detection, lambda_sa, format, output);
    }
    if (scheme1->parsed()) {
      return run_scheme1(s1_stats, s1_angles, format, output);
    }
    if (scheme2->parsed()) {
      return run_scheme2(s2_stats, s0, s1_mag, s1_phase, s2_angles, format, output);
    }
    if (sweep->parsed()) {
      return run_sweep(sweep_scheme, sweep_stats, resolution, threads, grid_csv, output);
    }
    if (trials->parsed()) {
      return run_trials(dist_file, preset, n, seed, alpha, log_csv, output);
    }
    if (reproduce->parsed()) {
      const auto outcome = cohsim::run_reproduce(
          rep_seed, tamper.empty() ? std::nullopt : std::make_optional(tamper));
      emit(outcome.json_text, output);
      return outcome.all_pass ? kExitOk : kExitDataError;
    }
  } catch (const cohsim::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDataError;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << '\n';
    return kExitDataError;
  }
  return kExitUsage;
}
