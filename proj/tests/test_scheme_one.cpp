#include "cohsim/scheme_one.hpp"

#include <doctest.h>

#include <random>

#include "cohsim/linalg.hpp"
#include "test_support.hpp"

using namespace cohsim;
using namespace cohsim::testing;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Oracle built from the literal post-selected states and rates, without
// touching the Fock pipeline: psi_00 = (|01> +- |10>)/sqrt(2),
// psi_01 = |01>, psi_10 = |10>, rates (1/2, 1/4, 1/4, 0); the rest of the
// rounds contribute uniform bits.
ConditionalDistribution oracle_distribution(Statistics stats, const BlochObservable& obs_a,
                                            const BlochObservable& obs_b) {
  const double sign = stats == Statistics::Boson ? 1.0 : -1.0;
  Eigen::Vector4cd psi[2][2];
  double rate[2][2];
  psi[0][0] = Eigen::Vector4cd::Zero();
  psi[0][0](1) = 1.0 / std::sqrt(2.0);
  psi[0][0](2) = sign / std::sqrt(2.0);
  rate[0][0] = 0.5;
  psi[0][1] = Eigen::Vector4cd::Unit(1);
  rate[0][1] = 0.25;
  psi[1][0] = Eigen::Vector4cd::Unit(2);
  rate[1][0] = 0.25;
  psi[1][1] = Eigen::Vector4cd::Zero();
  rate[1][1] = 0.0;

  std::array<double, 16> t{};
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          double quantum = 0.0;
          if (rate[x][y] > 0.0) {
            const Eigen::Matrix4cd effect = kron2(obs_a.projector(a), obs_b.projector(b));
            quantum = psi[x][y].dot(effect * psi[x][y]).real();
          }
          t[ConditionalDistribution::index(a, b, x, y)] =
              (1.0 - rate[x][y]) * 0.25 + rate[x][y] * quantum;
        }
      }
    }
  }
  return ConditionalDistribution::from_table(t);
}

// Trigonometric form of the closed-form win probability, derived
// independently of the matrix-element implementation.
double oracle_win(Statistics stats, double theta_a, double phi_a, double theta_b,
                  double phi_b) {
  const double sign = stats == Statistics::Boson ? 1.0 : -1.0;
  return 0.5 +
         sign / 16.0 * std::sin(theta_a) * std::sin(theta_b) * std::cos(phi_b - phi_a);
}

BlochObservable random_observable(std::mt19937_64& eng) {
  std::uniform_real_distribution<double> theta_dist(0.0, kPi);
  std::uniform_real_distribution<double> phi_dist(0.0, 2.0 * kPi);
  return {theta_dist(eng), phi_dist(eng)};
}

}  // namespace

TEST_CASE("joint state expansion") {
  SUBCASE("boson: four terms, all +1/2") {
    const StateVector s = prepare_joint_state(Statistics::Boson);
    CHECK(s.term_count() == 4);
    for (const auto occ : {elem({1, 1, 0, 0}), elem({1, 0, 0, 1}), elem({0, 1, 1, 0}),
                           elem({0, 0, 1, 1})}) {
      CHECK(std::abs(s.amplitude(occ) - Complex(0.5, 0.0)) < 1e-15);
    }
    CHECK(s.is_normalized());
  }

  SUBCASE("fermion: the ancilla-at-Alice source-at-Bob term flips sign") {
    const StateVector s = prepare_joint_state(Statistics::Fermion);
    CHECK(std::abs(s.amplitude(elem({1, 1, 0, 0})) - Complex(0.5, 0.0)) < 1e-15);
    CHECK(std::abs(s.amplitude(elem({1, 0, 0, 1})) - Complex(0.5, 0.0)) < 1e-15);
    CHECK(std::abs(s.amplitude(elem({0, 1, 1, 0})) - Complex(-0.5, 0.0)) < 1e-15);
    CHECK(std::abs(s.amplitude(elem({0, 0, 1, 1})) - Complex(0.5, 0.0)) < 1e-15);
    CHECK(s.is_normalized());
  }
}

TEST_CASE("post-selection probabilities and states") {
  SUBCASE("open-open keeps the entangled pair at rate 1/2") {
    const PostselectedState boson = encode_and_postselect(Statistics::Boson, 0, 0);
    CHECK(boson.probability == doctest::Approx(0.5).epsilon(1e-12));
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(boson.qubit_state(1) - Complex(r, 0.0)) < 1e-12);
    CHECK(std::abs(boson.qubit_state(2) - Complex(r, 0.0)) < 1e-12);
    CHECK(std::abs(boson.qubit_state(0)) < 1e-15);
    CHECK(std::abs(boson.qubit_state(3)) < 1e-15);

    const PostselectedState fermion = encode_and_postselect(Statistics::Fermion, 0, 0);
    CHECK(fermion.probability == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(fermion.qubit_state(1) - Complex(r, 0.0)) < 1e-12);
    CHECK(std::abs(fermion.qubit_state(2) - Complex(-r, 0.0)) < 1e-12);
  }

  SUBCASE("one blocker leaves a product state at rate 1/4") {
    // Up to a global phase (the fermionic pipeline yields -|10> for
    // x=1,y=0), the kept states are |0>_A|1>_B and |1>_A|0>_B.
    for (Statistics stats : {Statistics::Boson, Statistics::Fermion}) {
      const PostselectedState ps01 = encode_and_postselect(stats, 0, 1);
      CHECK(ps01.probability == doctest::Approx(0.25).epsilon(1e-12));
      CHECK(std::abs(ps01.qubit_state(1) - Complex(1.0, 0.0)) < 1e-12);

      const PostselectedState ps10 = encode_and_postselect(stats, 1, 0);
      CHECK(ps10.probability == doctest::Approx(0.25).epsilon(1e-12));
      CHECK(std::abs(std::abs(ps10.qubit_state(2)) - 1.0) < 1e-12);
      CHECK(std::abs(ps10.qubit_state(0)) < 1e-15);
      CHECK(std::abs(ps10.qubit_state(1)) < 1e-15);
      CHECK(std::abs(ps10.qubit_state(3)) < 1e-15);
    }
  }

  SUBCASE("both blockers never leave one particle per side") {
    for (Statistics stats : {Statistics::Boson, Statistics::Fermion}) {
      const PostselectedState ps = encode_and_postselect(stats, 1, 1);
      CHECK(ps.probability == 0.0);
      CHECK(ps.empty());
    }
  }
}

TEST_CASE("two-particle sector weights of the open-open state") {
  const StateVector s = prepare_joint_state(Statistics::Boson);
  const SectorResult both_at_alice = occupancy_sector(s, [](const Occupancy& occ) {
    return occ.count_in({kModeAS, kModeAM}) == 2;
  });
  CHECK(both_at_alice.probability == doctest::Approx(0.25).epsilon(1e-12));

  const SectorResult one_per_side = occupancy_sector(s, [](const Occupancy& occ) {
    return occ.count_in({kModeAS, kModeAM}) == 1 && occ.count_in({kModeBS, kModeBM}) == 1;
  });
  CHECK(one_per_side.probability == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("bosonic optimum: exact table, win probability and interference") {
  const SchemeOneConfig config{Statistics::Boson, BlochObservable::sigma_x(),
                               BlochObservable::sigma_x()};
  const auto d = measurement_distribution(config);

  CHECK(d.p(0, 0, 0, 0) == doctest::Approx(3.0 / 8.0).epsilon(1e-12));
  CHECK(d.p(1, 1, 0, 0) == doctest::Approx(3.0 / 8.0).epsilon(1e-12));
  CHECK(d.p(0, 1, 0, 0) == doctest::Approx(1.0 / 8.0).epsilon(1e-12));
  CHECK(d.p(1, 0, 0, 0) == doctest::Approx(1.0 / 8.0).epsilon(1e-12));
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      CHECK(d.p(a, b, 0, 1) == doctest::Approx(0.25).epsilon(1e-12));
      CHECK(d.p(a, b, 1, 0) == doctest::Approx(0.25).epsilon(1e-12));
      CHECK(d.p(a, b, 1, 1) == doctest::Approx(0.25).epsilon(1e-12));
    }
  }

  CHECK(d.win_probability() == doctest::Approx(9.0 / 16.0).epsilon(1e-12));
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const double expected = ((a ^ b) ? -1.0 : 1.0) / 8.0;
      CHECK(d.interference_term(a, b) == doctest::Approx(expected).epsilon(1e-12));
    }
  }

  CHECK(win_probability_closed_form(config) == doctest::Approx(9.0 / 16.0).epsilon(1e-12));
}

TEST_CASE("fermionic settings") {
  const SchemeOneConfig aligned{Statistics::Fermion, BlochObservable::sigma_x(),
                                BlochObservable::sigma_x()};
  CHECK(win_probability_closed_form(aligned) == doctest::Approx(7.0 / 16.0).epsilon(1e-12));
  CHECK(measurement_distribution(aligned).win_probability() ==
        doctest::Approx(7.0 / 16.0).epsilon(1e-12));

  const SchemeOneConfig opposed{Statistics::Fermion, BlochObservable::sigma_x(),
                                BlochObservable::minus_sigma_x()};
  CHECK(win_probability_closed_form(opposed) == doctest::Approx(9.0 / 16.0).epsilon(1e-12));
  CHECK(measurement_distribution(opposed).win_probability() ==
        doctest::Approx(9.0 / 16.0).epsilon(1e-12));
}

TEST_CASE("sigma_z readout carries no signal") {
  for (Statistics stats : {Statistics::Boson, Statistics::Fermion}) {
    const SchemeOneConfig config{stats, BlochObservable::sigma_z(),
                                 BlochObservable::sigma_z()};
    CHECK(win_probability_closed_form(config) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(measurement_distribution(config).win_probability() ==
          doctest::Approx(0.5).epsilon(1e-12));
  }
}

TEST_CASE("pipeline equals the closed forms on 200 random settings") {
  std::mt19937_64 eng(1812);
  double max_win = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const Statistics stats = (eng() & 1) ? Statistics::Boson : Statistics::Fermion;
    const BlochObservable obs_a = random_observable(eng);
    const BlochObservable obs_b = random_observable(eng);
    const SchemeOneConfig config{stats, obs_a, obs_b};

    const auto pipeline = measurement_distribution(config);
    const auto oracle = oracle_distribution(stats, obs_a, obs_b);
    for (std::size_t i = 0; i < 16; ++i) {
      CHECK(pipeline.table()[i] == doctest::Approx(oracle.table()[i]).epsilon(1e-12));
    }

    const double win = pipeline.win_probability();
    CHECK(win == doctest::Approx(win_probability_closed_form(config)).epsilon(1e-12));
    CHECK(win == doctest::Approx(oracle_win(stats, obs_a.theta(), obs_a.phi(), obs_b.theta(),
                                            obs_b.phi()))
                     .epsilon(1e-12));
    max_win = std::max(max_win, win);

    // Statistics duality: fermion(sA, sB) = boson(sA, -sB).
    const SchemeOneConfig flipped{
        stats == Statistics::Boson ? Statistics::Fermion : Statistics::Boson, obs_a,
        obs_b.negated()};
    CHECK(win_probability_closed_form(flipped) == doctest::Approx(win).epsilon(1e-12));
  }
  CHECK(max_win <= 9.0 / 16.0 + 1e-12);
}

TEST_CASE("post-selection rates do not depend on observables or statistics") {
  const double expected[2][2] = {{0.5, 0.25}, {0.25, 0.0}};
  for (Statistics stats : {Statistics::Boson, Statistics::Fermion}) {
    for (int x = 0; x < 2; ++x) {
      for (int y = 0; y < 2; ++y) {
        CHECK(encode_and_postselect(stats, x, y).probability ==
              doctest::Approx(expected[x][y]).epsilon(1e-12));
      }
    }
  }
}
