#include "cohsim/bloch.hpp"

#include <cmath>
#include <string>

namespace cohsim {

BlochObservable::BlochObservable(double theta, double phi) : theta_(theta), phi_(phi) {
  if (!(theta >= 0.0 && theta <= kPi)) {
    throw ValidationError("theta must lie in [0, pi], got " + std::to_string(theta));
  }
  if (!(phi >= 0.0 && phi < 2.0 * kPi)) {
    throw ValidationError("phi must lie in [0, 2*pi), got " + std::to_string(phi));
  }
}

Eigen::Matrix2cd BlochObservable::matrix() const {
  const double st = std::sin(theta_);
  const double ct = std::cos(theta_);
  const std::complex<double> off = st * std::exp(std::complex<double>(0.0, -phi_));
  Eigen::Matrix2cd m;
  m << ct, off, std::conj(off), -ct;
  return m;
}

Eigen::Matrix2cd BlochObservable::projector(int outcome) const {
  if (outcome != 0 && outcome != 1) throw ValidationError("projector outcome must be 0 or 1");
  const double sign = outcome == 0 ? 1.0 : -1.0;
  return 0.5 * (Eigen::Matrix2cd::Identity() + sign * matrix());
}

BlochObservable BlochObservable::negated() const {
  double phi = phi_ + kPi;
  if (phi >= 2.0 * kPi) phi -= 2.0 * kPi;
  return BlochObservable(kPi - theta_, phi);
}

BlochObservable BlochObservable::wrapped(double theta, double phi) {
  phi = std::fmod(phi, 2.0 * kPi);
  if (phi < 0.0) phi += 2.0 * kPi;
  return BlochObservable(theta, phi);
}

}  // namespace cohsim
