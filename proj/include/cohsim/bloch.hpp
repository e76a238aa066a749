#pragma once

#include <Eigen/Dense>

#include "cohsim/errors.hpp"

namespace cohsim {

/// Binary (+1/-1) observable on a two-level system, parametrized by a
/// point on the unit sphere. theta in [0, pi], phi in [0, 2*pi).
class BlochObservable {
 public:
  BlochObservable(double theta, double phi);

  double theta() const { return theta_; }
  double phi() const { return phi_; }

  /// sin(theta)cos(phi) sx + sin(theta)sin(phi) sy + cos(theta) sz.
  /// The upper off-diagonal is sin(theta) e^{-i phi}.
  Eigen::Matrix2cd matrix() const;

  /// (identity + (-1)^outcome * matrix()) / 2.
  Eigen::Matrix2cd projector(int outcome) const;

  /// Bloch-vector reversal: the observable with both outcomes swapped.
  BlochObservable negated() const;

  /// Same observable with phi reduced into [0, 2*pi). For consumers of
  /// closed sweep grids, where phi = 2*pi labels the wrap-around point.
  static BlochObservable wrapped(double theta, double phi);

  static BlochObservable sigma_x() { return {kHalfPi, 0.0}; }
  static BlochObservable sigma_y() { return {kHalfPi, kHalfPi}; }
  static BlochObservable sigma_z() { return {0.0, 0.0}; }
  static BlochObservable minus_sigma_x() { return {kHalfPi, kPi}; }

 private:
  static constexpr double kPi = 3.14159265358979323846;
  static constexpr double kHalfPi = kPi / 2.0;

  double theta_;
  double phi_;
};

}  // namespace cohsim
