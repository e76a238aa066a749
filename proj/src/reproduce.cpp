#include "cohsim/reproduce.hpp"

#include <cmath>
#include <random>
#include <vector>

#include <nlohmann/json.hpp>

#include "cohsim/bloch.hpp"
#include "cohsim/game.hpp"
#include "cohsim/scheme_one.hpp"
#include "cohsim/scheme_two.hpp"
#include "cohsim/trials.hpp"

namespace cohsim {

namespace {

using nlohmann::json;

struct Claim {
  std::string id;
  std::string description;
  double expected;
  double tolerance;
  json values;      // named computed values (closed_form / pipeline / value)
  double* primary;  // tamper target, points into computed storage
};

class ClaimTable {
 public:
  explicit ClaimTable(const std::optional<std::string>& tamper) : tamper_(tamper) {}

  /// Single-route claim.
  void add(const std::string& id, const std::string& description, double expected,
           double tolerance, double value) {
    add_multi(id, description, expected, tolerance, {{"value", value}});
  }

  /// Multi-route claim; every route must agree with the expected value.
  void add_multi(const std::string& id, const std::string& description, double expected,
                 double tolerance, std::vector<std::pair<std::string, double>> routes) {
    if (tamper_ && *tamper_ == id && !routes.empty()) {
      routes.front().second += 1e-6;
      tampered_ = true;
    }
    json values;
    bool pass = true;
    for (const auto& [name, v] : routes) {
      values[name] = v;
      pass = pass && std::abs(v - expected) <= tolerance;
    }
    json claim{{"id", id},          {"description", description}, {"expected", expected},
               {"tolerance", tolerance}, {"computed", values},    {"pass", pass}};
    claims_.push_back(claim);
    all_pass_ = all_pass_ && pass;
  }

  bool all_pass() const { return all_pass_; }
  bool tamper_consumed() const { return !tamper_ || tampered_; }
  json claims() const { return claims_; }

 private:
  std::optional<std::string> tamper_;
  bool tampered_ = false;
  bool all_pass_ = true;
  json claims_ = json::array();
};

double max_abs_interference(const ConditionalDistribution& d) {
  double m = 0.0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) m = std::max(m, std::abs(d.interference_term(a, b)));
  return m;
}

double interference_pattern_deviation(const ConditionalDistribution& d, double magnitude) {
  double m = 0.0;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const double target = ((a ^ b) != 0 ? -1.0 : 1.0) * magnitude;
      m = std::max(m, std::abs(d.interference_term(a, b) - target));
    }
  }
  return m;
}

}  // namespace

ReproduceOutcome run_reproduce(std::uint64_t trial_seed,
                               const std::optional<std::string>& tamper_claim) {
  ClaimTable table(tamper_claim);
  const double tol = 1e-12;

  // Classical strategies: every deterministic strategy and a seeded batch
  // of random shared-randomness mixtures must sit exactly on 1/2.
  {
    double worst_pwin_dev = 0.0;
    double worst_interference = 0.0;
    const auto strategies = enumerate_deterministic_strategies();
    for (const auto& s : strategies) {
      const auto d = strategy_distribution(s);
      worst_pwin_dev = std::max(worst_pwin_dev, std::abs(d.win_probability() - 0.5));
      worst_interference = std::max(worst_interference, max_abs_interference(d));
    }
    std::mt19937_64 eng(0x5eedc0deULL);
    for (int trial = 0; trial < 1000; ++trial) {
      MixedStrategy mixture;
      const std::size_t parts = 1 + eng() % 4;
      std::vector<double> weights(parts);
      double total = 0.0;
      for (auto& w : weights) {
        w = static_cast<double>(eng() >> 11) * 0x1.0p-53 + 1e-9;
        total += w;
      }
      for (std::size_t k = 0; k < parts; ++k) {
        ClassicalStrategy s = strategies[eng() % strategies.size()];
        const double lambda = static_cast<double>(eng() >> 11) * 0x1.0p-53;
        s.lambda_sa = lambda;
        s.lambda_sb = 1.0 - lambda;
        mixture.components.emplace_back(weights[k] / total, s);
      }
      const auto d = strategy_distribution(mixture);
      worst_pwin_dev = std::max(worst_pwin_dev, std::abs(d.win_probability() - 0.5));
      worst_interference = std::max(worst_interference, max_abs_interference(d));
    }
    table.add("classical-interference",
              "largest |I_ab| over the 32 deterministic strategies and 1000 random mixtures",
              0.0, tol, worst_interference);
    table.add("classical-win-probability",
              "largest |p_win - 1/2| over the same classical strategy set", 0.0, tol,
              worst_pwin_dev);
  }

  const BlochObservable sx = BlochObservable::sigma_x();
  const BlochObservable msx = BlochObservable::minus_sigma_x();

  // Shared-ancilla scheme.
  {
    const SchemeOneConfig boson{Statistics::Boson, sx, sx};
    table.add_multi("scheme1-boson-optimal-pwin",
                    "shared-ancilla scheme, bosons, both observables sigma_x", 9.0 / 16.0, tol,
                    {{"closed_form", win_probability_closed_form(boson)},
                     {"pipeline", measurement_distribution(boson).win_probability()}});
    table.add("scheme1-boson-interference",
              "deviation of I_ab from the alternating +-1/8 pattern at the bosonic optimum",
              0.0, tol,
              interference_pattern_deviation(measurement_distribution(boson), 0.125));

    const SchemeOneConfig fermion_opposed{Statistics::Fermion, sx, msx};
    table.add_multi("scheme1-fermion-opposed-pwin",
                    "shared-ancilla scheme, fermions, sigma_x against -sigma_x", 9.0 / 16.0,
                    tol,
                    {{"closed_form", win_probability_closed_form(fermion_opposed)},
                     {"pipeline", measurement_distribution(fermion_opposed).win_probability()}});

    const SchemeOneConfig fermion_aligned{Statistics::Fermion, sx, sx};
    table.add_multi("scheme1-fermion-aligned-pwin",
                    "shared-ancilla scheme, fermions, both observables sigma_x", 7.0 / 16.0,
                    tol,
                    {{"closed_form", win_probability_closed_form(fermion_aligned)},
                     {"pipeline", measurement_distribution(fermion_aligned).win_probability()}});

    double rate_dev = 0.0;
    const double expected_rates[2][2] = {{0.5, 0.25}, {0.25, 0.0}};
    for (Statistics stats : {Statistics::Boson, Statistics::Fermion}) {
      for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
          const double rate = encode_and_postselect(stats, x, y).probability;
          rate_dev = std::max(rate_dev, std::abs(rate - expected_rates[x][y]));
        }
      }
    }
    table.add("scheme1-postselection-rates",
              "deviation of the one-particle-per-side rates from (1/2, 1/4, 1/4, 0)", 0.0, tol,
              rate_dev);
  }

  // Single-particle scheme.
  {
    const SourceAmplitudes balanced(1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0));
    table.add_multi("scheme2-optimal-pwin",
                    "single-particle scheme, balanced source, both observables sigma_x",
                    5.0 / 8.0, tol,
                    {{"closed_form", win_probability_closed_form(balanced, sx, sx)},
                     {"pipeline",
                      measurement_distribution(balanced, sx, sx).win_probability()}});
    table.add("scheme2-optimal-interference",
              "deviation of I_ab from the alternating +-1/4 pattern at the optimum", 0.0, tol,
              interference_pattern_deviation(measurement_distribution(balanced, sx, sx), 0.25));

    double refused = 0.0;
    try {
      assert_physicality(Statistics::Fermion);
    } catch (const SuperselectionError&) {
      refused = 1.0;
    }
    table.add("scheme2-fermion-refusal",
              "fermionic invocation is refused with a superselection error (1 = refused)", 1.0,
              0.0, refused);
  }

  // Significance demonstration: 1e5 rounds of the bosonic optimum must
  // reject the classical hypothesis overwhelmingly.
  {
    const SchemeOneConfig boson{Statistics::Boson, sx, sx};
    const auto dist = measurement_distribution(boson);
    const TrialLog log = simulate_game(dist, 100000, trial_seed);
    const SignificanceReport report = significance(log);
    table.add("azuma-demo-1e5",
              "classical-hypothesis tail bound after 1e5 rounds at the bosonic optimum "
              "(pass when below 1e-100)",
              0.0, 1e-100, report.bound_raw);
  }

  if (!table.tamper_consumed()) {
    throw ValidationError("unknown tamper claim id: " + *tamper_claim);
  }

  json doc{{"schema_version", 1},
           {"command", "reproduce"},
           {"trial_seed", trial_seed},
           {"claims", table.claims()},
           {"all_pass", table.all_pass()}};

  ReproduceOutcome outcome;
  outcome.all_pass = table.all_pass();
  outcome.json_text = doc.dump(2) + "\n";
  return outcome;
}

}  // namespace cohsim
