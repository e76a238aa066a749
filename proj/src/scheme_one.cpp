#include "cohsim/scheme_one.hpp"

#include <cmath>

#include "cohsim/linalg.hpp"

namespace cohsim {

StateVector prepare_joint_state(Statistics stats) {
  StateVector vac = make_vacuum(kSchemeOneModes);

  // (a_M^+ + b_M^+)|vac>
  StateVector ancilla(kSchemeOneModes);
  {
    const StateVector at_a = apply_creation(vac, kModeAM, stats);
    const StateVector at_b = apply_creation(vac, kModeBM, stats);
    for (const auto& [e, amp] : at_a.terms()) ancilla.add_term(e, amp);
    for (const auto& [e, amp] : at_b.terms()) ancilla.add_term(e, amp);
  }

  // (a_S^+ + b_S^+) applied on top, then the overall 1/2.
  StateVector joint(kSchemeOneModes);
  {
    const StateVector at_a = apply_creation(ancilla, kModeAS, stats);
    const StateVector at_b = apply_creation(ancilla, kModeBS, stats);
    for (const auto& [e, amp] : at_a.terms()) joint.add_term(e, 0.5 * amp);
    for (const auto& [e, amp] : at_b.terms()) joint.add_term(e, 0.5 * amp);
  }
  return joint;
}

PostselectedState encode_and_postselect(Statistics stats, int x, int y) {
  StateVector state = prepare_joint_state(stats);
  if (x == 1) state = apply_blocker(state, kModeAS);
  if (y == 1) state = apply_blocker(state, kModeBS);

  const auto one_per_side = [](const Occupancy& occ) {
    return occ.count_in({kModeAS, kModeAM}) == 1 && occ.count_in({kModeBS, kModeBM}) == 1;
  };
  const SectorResult sector = occupancy_sector(state, one_per_side);

  PostselectedState out;
  out.probability = sector.probability;
  if (sector.probability == 0.0) return out;

  for (const auto& [e, amp] : sector.state.terms()) {
    // Survivors carry both particles, so nothing was absorbed.
    if (e.absorbed() != 0) {
      throw ValidationError("post-selected component carries a loss record");
    }
    const int bit_a = e.occupied(kModeAS) ? 0 : 1;
    const int bit_b = e.occupied(kModeBS) ? 0 : 1;
    out.qubit_state(2 * bit_a + bit_b) += amp;
  }
  return out;
}

ConditionalDistribution measurement_distribution(const SchemeOneConfig& config) {
  std::array<double, 16> t{};
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const PostselectedState ps = encode_and_postselect(config.stats, x, y);
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          double quantum = 0.0;
          if (!ps.empty()) {
            const Eigen::Matrix4cd proj =
                kron2(config.obs_a.projector(a), config.obs_b.projector(b));
            quantum = ps.qubit_state.dot(proj * ps.qubit_state).real();
          }
          t[ConditionalDistribution::index(a, b, x, y)] =
              (1.0 - ps.probability) * 0.25 + ps.probability * quantum;
        }
      }
    }
  }
  return ConditionalDistribution::from_table(t);
}

double win_probability_closed_form(const SchemeOneConfig& config) {
  const Eigen::Matrix2cd sa = config.obs_a.matrix();
  const Eigen::Matrix2cd sb = config.obs_b.matrix();
  const double cross = 2.0 * (sa(0, 1) * sb(1, 0)).real();
  const double sign = config.stats == Statistics::Boson ? 1.0 : -1.0;
  return 0.5 + sign * cross / 32.0;
}

}  // namespace cohsim
