#pragma once

#include <Eigen/Dense>

#include "cohsim/bloch.hpp"
#include "cohsim/fock.hpp"
#include "cohsim/game.hpp"

namespace cohsim {

/// Mode layout of the shared-ancilla scheme. One source particle and one
/// indistinguishable ancilla, each split between Alice's and Bob's sides.
/// The ordering fixes the fermionic sign convention.
inline constexpr ModeIndex kModeAS = 0;  // source particle at Alice
inline constexpr ModeIndex kModeAM = 1;  // ancilla at Alice
inline constexpr ModeIndex kModeBS = 2;  // source particle at Bob
inline constexpr ModeIndex kModeBM = 3;  // ancilla at Bob
inline constexpr std::size_t kSchemeOneModes = 4;

struct SchemeOneConfig {
  Statistics stats;
  BlochObservable obs_a;
  BlochObservable obs_b;
};

/// Result of keeping only the rounds with one particle on each side.
/// qubit_state lives on |0>_A = source-at-A, |1>_A = ancilla-at-A (same
/// for B), ordered |00>, |01>, |10>, |11>.
struct PostselectedState {
  double probability = 0.0;
  Eigen::Vector4cd qubit_state = Eigen::Vector4cd::Zero();

  bool empty() const { return probability == 0.0; }
};

/// (1/2)(a_S^+ + b_S^+)(a_M^+ + b_M^+)|vac>, built through the creation
/// operators so the fermionic sign comes out of the anticommutation.
StateVector prepare_joint_state(Statistics stats);

/// Blocks the source path to Alice when x=1 and to Bob when y=1, then
/// post-selects on exactly one particle per side.
PostselectedState encode_and_postselect(Statistics stats, int x, int y);

/// Exact conditional distribution: post-selected rounds follow the
/// projective measurements, the rest contribute an independent uniform
/// bit per party.
ConditionalDistribution measurement_distribution(const SchemeOneConfig& config);

/// 1/2 +- (1/32)(<0|sA|1><1|sB|0> + <1|sA|0><0|sB|1>), plus sign for
/// bosons, minus for fermions.
double win_probability_closed_form(const SchemeOneConfig& config);

}  // namespace cohsim
