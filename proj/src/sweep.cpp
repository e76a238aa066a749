#include "cohsim/sweep.hpp"

#include <cmath>

namespace cohsim {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct TrigTable {
  std::vector<double> sin_v;
  std::vector<double> cos_v;

  explicit TrigTable(const std::vector<double>& grid) {
    sin_v.reserve(grid.size());
    cos_v.reserve(grid.size());
    for (double v : grid) {
      sin_v.push_back(std::sin(v));
      cos_v.push_back(std::cos(v));
    }
  }
};

// p_win = 1/2 + sign/16 * sin(ta) sin(tb) cos(pb - pa), axes
// (theta_a, phi_a, theta_b, phi_b). Per-axis trig is precomputed and the
// partial products are refreshed from the lowest changed axis down.
class SchemeOneObjective {
 public:
  SchemeOneObjective(Statistics stats, const std::vector<std::vector<double>>& grids)
      : sign_(stats == Statistics::Boson ? 1.0 : -1.0),
        theta_a_(grids[0]),
        phi_a_(grids[1]),
        theta_b_(grids[2]),
        phi_b_(grids[3]) {}

  double operator()(std::span<const std::size_t> idx, std::span<const double>,
                    std::size_t changed_from) {
    switch (changed_from) {
      case 0:
        m0_ = sign_ / 16.0 * theta_a_.sin_v[idx[0]];
        [[fallthrough]];
      case 1:
        c1_ = phi_a_.cos_v[idx[1]];
        s1_ = phi_a_.sin_v[idx[1]];
        [[fallthrough]];
      case 2:
        m2_ = m0_ * theta_b_.sin_v[idx[2]];
        [[fallthrough]];
      default:
        break;
    }
    // cos(pb - pa) = cos(pb) cos(pa) + sin(pb) sin(pa)
    return 0.5 + m2_ * (phi_b_.cos_v[idx[3]] * c1_ + phi_b_.sin_v[idx[3]] * s1_);
  }

 private:
  double sign_;
  TrigTable theta_a_, phi_a_, theta_b_, phi_b_;
  double m0_ = 0.0, c1_ = 1.0, s1_ = 0.0, m2_ = 0.0;
};

// p_win = 1/2 + (1/8) sin(2 alpha) sin(ta) sin(tb) cos(delta + pa - pb),
// axes (alpha, delta, theta_a, phi_a, theta_b, phi_b).
class SchemeTwoObjective {
 public:
  explicit SchemeTwoObjective(const std::vector<std::vector<double>>& grids)
      : delta_(grids[1]), theta_a_(grids[2]), phi_a_(grids[3]), theta_b_(grids[4]),
        phi_b_(grids[5]) {
    sin_2alpha_.reserve(grids[0].size());
    for (double v : grids[0]) sin_2alpha_.push_back(std::sin(2.0 * v));
  }

  double operator()(std::span<const std::size_t> idx, std::span<const double>,
                    std::size_t changed_from) {
    switch (changed_from) {
      case 0:
        m0_ = 0.125 * sin_2alpha_[idx[0]];
        [[fallthrough]];
      case 1:
        c1_ = delta_.cos_v[idx[1]];
        s1_ = delta_.sin_v[idx[1]];
        [[fallthrough]];
      case 2:
        m2_ = m0_ * theta_a_.sin_v[idx[2]];
        [[fallthrough]];
      case 3:
        // e^{i(delta + pa)}
        c3_ = c1_ * phi_a_.cos_v[idx[3]] - s1_ * phi_a_.sin_v[idx[3]];
        s3_ = s1_ * phi_a_.cos_v[idx[3]] + c1_ * phi_a_.sin_v[idx[3]];
        [[fallthrough]];
      case 4:
        m4_ = m2_ * theta_b_.sin_v[idx[4]];
        [[fallthrough]];
      default:
        break;
    }
    // cos(delta + pa - pb) = cos(delta + pa) cos(pb) + sin(delta + pa) sin(pb)
    return 0.5 + m4_ * (c3_ * phi_b_.cos_v[idx[5]] + s3_ * phi_b_.sin_v[idx[5]]);
  }

 private:
  std::vector<double> sin_2alpha_;
  TrigTable delta_, theta_a_, phi_a_, theta_b_, phi_b_;
  double m0_ = 0.0, c1_ = 1.0, s1_ = 0.0, m2_ = 0.0, c3_ = 1.0, s3_ = 0.0, m4_ = 0.0;
};

std::vector<std::vector<double>> grids_for(std::span<const Axis> axes, std::size_t resolution) {
  std::vector<std::vector<double>> grids;
  grids.reserve(axes.size());
  for (const Axis& axis : axes) grids.push_back(axis_grid(axis, resolution));
  return grids;
}

}  // namespace

std::vector<double> axis_grid(const Axis& axis, std::size_t resolution) {
  if (resolution < 1) throw ConfigError("grid resolution must be at least 1");
  if (!(axis.lo <= axis.hi)) throw ConfigError("axis bounds out of order: " + axis.name);
  std::vector<double> grid;
  grid.reserve(resolution);
  if (resolution == 1) {
    grid.push_back(axis.lo);
    return grid;
  }
  const double step = (axis.hi - axis.lo) / static_cast<double>(resolution - 1);
  for (std::size_t i = 0; i < resolution; ++i) {
    grid.push_back(axis.lo + static_cast<double>(i) * step);
  }
  return grid;
}

std::vector<Axis> scheme_one_axes() {
  return {{"theta_a", 0.0, kPi},
          {"phi_a", 0.0, 2.0 * kPi},
          {"theta_b", 0.0, kPi},
          {"phi_b", 0.0, 2.0 * kPi}};
}

std::vector<Axis> scheme_two_axes() {
  return {{"alpha", 0.0, kPi / 2.0}, {"delta", 0.0, 2.0 * kPi},
          {"theta_a", 0.0, kPi},     {"phi_a", 0.0, 2.0 * kPi},
          {"theta_b", 0.0, kPi},     {"phi_b", 0.0, 2.0 * kPi}};
}

SweepResult sweep_scheme_one(Statistics stats, std::size_t resolution, unsigned threads) {
  const std::vector<Axis> axes = scheme_one_axes();
  SchemeOneObjective objective(stats, grids_for(axes, resolution));
  return grid_search(std::span<const Axis>(axes), resolution, objective, threads);
}

SweepResult sweep_scheme_two(std::size_t resolution, unsigned threads) {
  const std::vector<Axis> axes = scheme_two_axes();
  SchemeTwoObjective objective(grids_for(axes, resolution));
  return grid_search(std::span<const Axis>(axes), resolution, objective, threads);
}

}  // namespace cohsim
