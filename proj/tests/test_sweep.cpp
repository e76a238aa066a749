#include "cohsim/sweep.hpp"

#include <doctest.h>

#include <cmath>

#include "cohsim/scheme_one.hpp"
#include "cohsim/scheme_two.hpp"

using namespace cohsim;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("axis grids") {
  const Axis axis{"theta", 0.0, kPi};
  const auto single = axis_grid(axis, 1);
  CHECK(single.size() == 1);
  CHECK(single[0] == 0.0);

  const auto five = axis_grid(axis, 5);
  CHECK(five.size() == 5);
  CHECK(five.front() == 0.0);
  CHECK(five.back() == doctest::Approx(kPi));
  CHECK(five[2] == doctest::Approx(kPi / 2.0));

  CHECK_THROWS_AS(axis_grid(axis, 0), ConfigError);
  CHECK_THROWS_AS(axis_grid(Axis{"bad", 1.0, 0.0}, 3), ConfigError);
}

TEST_CASE("resolution one evaluates the single corner point") {
  const Axis axes[] = {{"u", 0.25, 1.0}, {"v", 0.5, 2.0}};
  const auto result = grid_search(
      std::span<const Axis>(axes), 1,
      [](std::span<const std::size_t>, std::span<const double> values, std::size_t) {
        return values[0] + values[1];
      });
  CHECK(result.evaluations == 1);
  CHECK(result.best_value == doctest::Approx(0.75));
  CHECK(result.best_params[0] == 0.25);
  CHECK(result.best_params[1] == 0.5);
}

TEST_CASE("ties break to the lexicographically smallest tuple") {
  const Axis axes[] = {{"u", 0.0, 1.0}, {"v", 0.0, 1.0}};
  const auto result = grid_search(
      std::span<const Axis>(axes), 3,
      [](std::span<const std::size_t>, std::span<const double>, std::size_t) { return 1.0; });
  CHECK(result.best_indices[0] == 0);
  CHECK(result.best_indices[1] == 0);
  CHECK(result.evaluations == 9);
}

TEST_CASE("scheme sweeps attain the known optima on odd grids") {
  const SweepResult one = sweep_scheme_one(Statistics::Boson, 9);
  CHECK(one.best_value == doctest::Approx(9.0 / 16.0).epsilon(1e-9));
  CHECK(one.best_value <= 9.0 / 16.0 + 1e-12);
  CHECK(one.best_params[0] == doctest::Approx(kPi / 2.0));  // theta_a
  CHECK(one.best_params[1] == doctest::Approx(0.0));        // phi_a (lexicographic)

  const SweepResult fermion = sweep_scheme_one(Statistics::Fermion, 9);
  CHECK(fermion.best_value == doctest::Approx(9.0 / 16.0).epsilon(1e-9));

  const SweepResult two = sweep_scheme_two(9);
  CHECK(two.best_value == doctest::Approx(5.0 / 8.0).epsilon(1e-9));
  CHECK(two.best_value <= 5.0 / 8.0 + 1e-12);
  CHECK(two.best_params[0] == doctest::Approx(kPi / 4.0));  // alpha: balanced source
}

TEST_CASE("best value re-evaluates to itself through the scheme modules") {
  const SweepResult one = sweep_scheme_one(Statistics::Boson, 9);
  const SchemeOneConfig config{Statistics::Boson,
                               BlochObservable::wrapped(one.best_params[0], one.best_params[1]),
                               BlochObservable::wrapped(one.best_params[2], one.best_params[3])};
  CHECK(win_probability_closed_form(config) == doctest::Approx(one.best_value).epsilon(1e-12));

  const SweepResult two = sweep_scheme_two(9);
  const SourceAmplitudes source(std::cos(two.best_params[0]),
                                std::polar(std::sin(two.best_params[0]), two.best_params[1]));
  CHECK(win_probability_closed_form(source,
                                    BlochObservable::wrapped(two.best_params[2], two.best_params[3]),
                                    BlochObservable::wrapped(two.best_params[4], two.best_params[5])) ==
        doctest::Approx(two.best_value).epsilon(1e-12));
}

TEST_CASE("sweep objectives agree with the full pipelines on sampled grid points") {
  const auto axes = scheme_one_axes();
  std::vector<std::vector<double>> grids;
  for (const Axis& axis : axes) grids.push_back(axis_grid(axis, 5));
  for (std::size_t i0 : {0u, 2u, 4u}) {
    for (std::size_t i2 : {1u, 3u}) {
      const SchemeOneConfig config{Statistics::Boson,
                                   BlochObservable::wrapped(grids[0][i0], grids[1][1]),
                                   BlochObservable::wrapped(grids[2][i2], grids[3][2])};
      CHECK(measurement_distribution(config).win_probability() ==
            doctest::Approx(win_probability_closed_form(config)).epsilon(1e-12));
    }
  }

  const auto axes2 = scheme_two_axes();
  std::vector<std::vector<double>> grids2;
  for (const Axis& axis : axes2) grids2.push_back(axis_grid(axis, 5));
  for (std::size_t ia : {1u, 2u}) {
    const SourceAmplitudes source(std::cos(grids2[0][ia]),
                                  std::polar(std::sin(grids2[0][ia]), grids2[1][3]));
    const BlochObservable obs_a = BlochObservable::wrapped(grids2[2][2], grids2[3][1]);
    const BlochObservable obs_b = BlochObservable::wrapped(grids2[4][1], grids2[5][4]);
    CHECK(measurement_distribution(source, obs_a, obs_b).win_probability() ==
          doctest::Approx(win_probability_closed_form(source, obs_a, obs_b)).epsilon(1e-12));
  }
}

TEST_CASE("nested grids never lose ground") {
  double previous = 0.0;
  for (std::size_t resolution : {5u, 9u, 17u}) {
    const SweepResult r = sweep_scheme_one(Statistics::Boson, resolution);
    CHECK(r.best_value >= previous - 1e-15);
    previous = r.best_value;
  }
}

TEST_CASE("worker count does not change the result") {
  const SweepResult serial = sweep_scheme_one(Statistics::Boson, 21, 1);
  const SweepResult parallel = sweep_scheme_one(Statistics::Boson, 21, 4);
  CHECK(serial.best_value == parallel.best_value);
  CHECK(serial.best_indices == parallel.best_indices);
  CHECK(serial.evaluations == parallel.evaluations);
}
