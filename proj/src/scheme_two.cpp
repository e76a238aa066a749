#include "cohsim/scheme_two.hpp"

#include <cmath>

#include "cohsim/linalg.hpp"

namespace cohsim {

namespace {
constexpr double kTol = 1e-12;
constexpr double kPsdFloor = -1e-10;

Eigen::Matrix2cd vacuum_projector() {
  Eigen::Matrix2cd v = Eigen::Matrix2cd::Zero();
  v(0, 0) = 1.0;
  return v;
}
}  // namespace

SourceAmplitudes::SourceAmplitudes(std::complex<double> s0_in, std::complex<double> s1_in)
    : s0(s0_in), s1(s1_in) {
  if (std::abs(std::norm(s0) + std::norm(s1) - 1.0) > kTol) {
    throw ValidationError("source amplitudes must satisfy |s0|^2 + |s1|^2 = 1");
  }
}

DensityMatrix::DensityMatrix(const Eigen::Matrix4cd& m) : m_(m) {
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kTol) {
    throw ValidationError("density matrix must be Hermitian");
  }
  if (std::abs(m.trace().real() - 1.0) > kTol || std::abs(m.trace().imag()) > kTol) {
    throw ValidationError("density matrix must have unit trace");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < kPsdFloor) {
    throw ValidationError("density matrix must be positive semidefinite");
  }
}

Eigen::Matrix2cd DensityMatrix::reduced_a() const {
  Eigen::Matrix2cd r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = m_(2 * i, 2 * j) + m_(2 * i + 1, 2 * j + 1);
  return r;
}

Eigen::Matrix2cd DensityMatrix::reduced_b() const {
  Eigen::Matrix2cd r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = m_(i, j) + m_(2 + i, 2 + j);
  return r;
}

DensityMatrix prepare_state(const SourceAmplitudes& s) {
  Eigen::Vector4cd psi = Eigen::Vector4cd::Zero();
  psi(2) = s.s0;  // |1>_A |0>_B
  psi(1) = s.s1;  // |0>_A |1>_B
  return DensityMatrix(psi * psi.adjoint());
}

DensityMatrix blocking_channel(const DensityMatrix& rho, Side side) {
  if (side == Side::A) {
    return DensityMatrix(kron2(vacuum_projector(), rho.reduced_b()));
  }
  return DensityMatrix(kron2(rho.reduced_a(), vacuum_projector()));
}

DensityMatrix encoded_state(const SourceAmplitudes& s, int x, int y) {
  DensityMatrix rho = prepare_state(s);
  if (x == 1) rho = blocking_channel(rho, Side::A);
  if (y == 1) rho = blocking_channel(rho, Side::B);
  return rho;
}

ConditionalDistribution measurement_distribution(const SourceAmplitudes& s,
                                                 const BlochObservable& obs_a,
                                                 const BlochObservable& obs_b) {
  std::array<double, 16> t{};
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const DensityMatrix rho = encoded_state(s, x, y);
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          const Eigen::Matrix4cd effect = kron2(obs_a.projector(a), obs_b.projector(b));
          t[ConditionalDistribution::index(a, b, x, y)] =
              (rho.matrix() * effect).trace().real();
        }
      }
    }
  }
  return ConditionalDistribution::from_table(t);
}

double win_probability_closed_form(const SourceAmplitudes& s, const BlochObservable& obs_a,
                                   const BlochObservable& obs_b) {
  const Eigen::Matrix2cd sa = obs_a.matrix();
  const Eigen::Matrix2cd sb = obs_b.matrix();
  const std::complex<double> cross = s.s0 * std::conj(s.s1) * sa(0, 1) * sb(1, 0);
  return 0.5 + 2.0 * cross.real() / 8.0;
}

std::string assert_physicality(Statistics stats) {
  if (stats == Statistics::Fermion) {
    throw SuperselectionError(
        "the parity superselection rule forbids superposing even and odd fermion "
        "number, so the vacuum/one-particle measurements of this scheme cannot be "
        "realized with fermions");
  }
  return "bosonic vacuum/one-particle measurements require particle-number "
         "non-conserving operations; demanding, but physical in principle";
}

}  // namespace cohsim
