#pragma once

#include <complex>
#include <string>

#include <Eigen/Dense>

#include "cohsim/bloch.hpp"
#include "cohsim/fock.hpp"
#include "cohsim/game.hpp"

namespace cohsim {

/// Source amplitudes of the one-particle two-mode state
/// s0 |1>_A |0>_B + s1 |0>_A |1>_B. Unit norm enforced.
struct SourceAmplitudes {
  std::complex<double> s0;
  std::complex<double> s1;

  SourceAmplitudes(std::complex<double> s0_in, std::complex<double> s1_in);
};

/// State on the two-mode vacuum/one-particle space, basis ordered
/// |0>_A|0>_B, |0>_A|1>_B, |1>_A|0>_B, |1>_A|1>_B. Hermitian, unit trace,
/// positive semidefinite; checked on construction.
class DensityMatrix {
 public:
  explicit DensityMatrix(const Eigen::Matrix4cd& m);

  const Eigen::Matrix4cd& matrix() const { return m_; }

  /// Reduced states by partial trace.
  Eigen::Matrix2cd reduced_a() const;
  Eigen::Matrix2cd reduced_b() const;

 private:
  Eigen::Matrix4cd m_;
};

enum class Side { A, B };

DensityMatrix prepare_state(const SourceAmplitudes& s);

/// Absorbing barrier as a channel: the blocked side collapses to vacuum,
/// the other side keeps its reduced state. Trace preserving.
DensityMatrix blocking_channel(const DensityMatrix& rho, Side side);

/// Applies the A-side channel when x=1 and the B-side channel when y=1.
DensityMatrix encoded_state(const SourceAmplitudes& s, int x, int y);

/// p(ab|xy) = Tr[rho_xy Pi_a x Pi_b] with the observables acting on the
/// local vacuum/one-particle spaces.
ConditionalDistribution measurement_distribution(const SourceAmplitudes& s,
                                                 const BlochObservable& obs_a,
                                                 const BlochObservable& obs_b);

/// 1/2 + (1/8)(s0 s1* <0|sA|1><1|sB|0> + conjugate).
double win_probability_closed_form(const SourceAmplitudes& s, const BlochObservable& obs_a,
                                   const BlochObservable& obs_b);

/// Bosons may run this scheme (the vacuum/one-particle measurement needs
/// particle-number non-conserving operations, which is demanding but
/// possible); fermions may not, by the parity superselection rule.
/// Returns the advisory note for bosons, throws SuperselectionError for
/// fermions.
std::string assert_physicality(Statistics stats);

}  // namespace cohsim
