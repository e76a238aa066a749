#pragma once

#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "cohsim/fock.hpp"

namespace cohsim::testing {

inline FockBasisElement elem(std::initializer_list<int> occupancy) {
  std::uint32_t bits = 0;
  std::size_t i = 0;
  for (int n : occupancy) {
    if (n) bits |= (1u << i);
    ++i;
  }
  return FockBasisElement::with_occupancy(bits);
}

inline StateVector scaled(const StateVector& s, Complex factor) {
  StateVector out(s.mode_count());
  for (const auto& [e, amp] : s.terms()) out.add_term(e, factor * amp);
  return out;
}

inline StateVector sum(const StateVector& a, const StateVector& b) {
  StateVector out(a.mode_count());
  for (const auto& [e, amp] : a.terms()) out.add_term(e, amp);
  for (const auto& [e, amp] : b.terms()) out.add_term(e, amp);
  return out;
}

/// Random normalized state over the loss-free occupancy basis.
inline StateVector random_state(std::mt19937_64& eng, std::size_t mode_count) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  StateVector out(mode_count);
  for (std::uint32_t bits = 0; bits < (1u << mode_count); ++bits) {
    out.add_term(FockBasisElement::with_occupancy(bits), Complex(gauss(eng), gauss(eng)));
  }
  return out.normalized();
}

/// Random normalized state over elements with a fixed particle count.
inline StateVector random_state_fixed_number(std::mt19937_64& eng, std::size_t mode_count,
                                             int particles) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  StateVector out(mode_count);
  for (std::uint32_t bits = 0; bits < (1u << mode_count); ++bits) {
    if (__builtin_popcount(bits) != particles) continue;
    out.add_term(FockBasisElement::with_occupancy(bits), Complex(gauss(eng), gauss(eng)));
  }
  return out.normalized();
}

inline Eigen::Matrix2cd random_hermitian2(std::mt19937_64& eng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::Matrix2cd h;
  h(0, 0) = gauss(eng);
  h(1, 1) = gauss(eng);
  const Complex off(gauss(eng), gauss(eng));
  h(0, 1) = off;
  h(1, 0) = std::conj(off);
  return h;
}

/// exp(i h) for Hermitian h, by eigendecomposition.
inline Eigen::Matrix2cd unitary_from_hermitian(const Eigen::Matrix2cd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(h);
  const auto& values = solver.eigenvalues();
  const auto& vectors = solver.eigenvectors();
  Eigen::Matrix2cd phases = Eigen::Matrix2cd::Zero();
  for (int k = 0; k < 2; ++k) phases(k, k) = std::exp(Complex(0.0, values(k)));
  return vectors * phases * vectors.adjoint();
}

inline Eigen::Matrix2cd random_unitary2(std::mt19937_64& eng) {
  return unitary_from_hermitian(random_hermitian2(eng));
}

/// Oracle: the lift of u = exp(i h) on the full occupancy basis, built as
/// the exponential of H = sum_{ij} h_ij a_i^+ a_j with statistics-aware
/// signs, transitions out of the binary-occupancy basis dropped. Columns
/// and rows are indexed by occupancy bits.
Eigen::MatrixXcd exponential_lift_oracle(const Eigen::Matrix2cd& h, ModeIndex p, ModeIndex q,
                                         std::size_t mode_count, Statistics stats);

}  // namespace cohsim::testing
