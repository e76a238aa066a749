#include "cohsim/fock.hpp"

#include <cmath>

namespace cohsim {

const char* to_string(Statistics stats) {
  return stats == Statistics::Boson ? "boson" : "fermion";
}

double StateVector::squared_norm() const {
  double s = 0.0;
  for (const auto& [e, amp] : amps_) s += std::norm(amp);
  return s;
}

double StateVector::norm() const { return std::sqrt(squared_norm()); }

bool StateVector::is_normalized(double tol) const {
  return std::abs(squared_norm() - 1.0) <= tol;
}

StateVector StateVector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw ValidationError("cannot normalize the zero state");
  StateVector out(mode_count_);
  for (const auto& [e, amp] : amps_) out.add_term(e, amp / n);
  return out;
}

void StateVector::add_term(const FockBasisElement& e, Complex amp) {
  auto [it, inserted] = amps_.try_emplace(e, amp);
  if (!inserted) {
    it->second += amp;
    if (it->second == Complex(0.0, 0.0)) amps_.erase(it);
  } else if (amp == Complex(0.0, 0.0)) {
    amps_.erase(it);
  }
}

bool approx_equal(const StateVector& a, const StateVector& b, double tol) {
  if (a.mode_count() != b.mode_count()) return false;
  for (const auto& [e, amp] : a.terms()) {
    if (std::abs(amp - b.amplitude(e)) > tol) return false;
  }
  for (const auto& [e, amp] : b.terms()) {
    if (std::abs(amp - a.amplitude(e)) > tol) return false;
  }
  return true;
}

StateVector make_vacuum(std::size_t mode_count) {
  if (mode_count < 1 || mode_count > kMaxModes) {
    throw ConfigError("mode_count must be in [1, " + std::to_string(kMaxModes) +
                      "], got " + std::to_string(mode_count));
  }
  StateVector state(mode_count);
  state.add_term(FockBasisElement{}, Complex(1.0, 0.0));
  return state;
}

namespace {

void check_mode(const StateVector& state, ModeIndex mode) {
  if (mode >= state.mode_count()) {
    throw ConfigError("mode index " + std::to_string(mode) + " out of range for " +
                      std::to_string(state.mode_count()) + " modes");
  }
}

// Occupied modes with ordinal strictly below `mode`.
int parity_below(std::uint32_t bits, ModeIndex mode) {
  const std::uint32_t mask = (1u << mode) - 1u;
  return (__builtin_popcount(bits & mask) & 1) ? -1 : 1;
}

}  // namespace

StateVector apply_creation(const StateVector& state, ModeIndex mode, Statistics stats) {
  check_mode(state, mode);
  StateVector out(state.mode_count());
  for (const auto& [e, amp] : state.terms()) {
    if (e.occupied(mode)) {
      if (stats == Statistics::Boson) {
        throw UnsupportedOccupancyError(
            "bosonic creation on occupied mode " + std::to_string(mode) +
            ": double occupancy is outside the single-excitation regime");
      }
      continue;  // fermionic exclusion annihilates the component
    }
    const double sign =
        stats == Statistics::Fermion ? parity_below(e.occupancy_bits(), mode) : 1.0;
    out.add_term(e.with_mode_set(mode), sign * amp);
  }
  return out;
}

StateVector apply_blocker(const StateVector& state, ModeIndex mode) {
  check_mode(state, mode);
  StateVector out(state.mode_count());
  for (const auto& [e, amp] : state.terms()) {
    out.add_term(e.occupied(mode) ? e.with_mode_absorbed(mode) : e, amp);
  }
  return out;
}

SectorResult occupancy_sector(const StateVector& state, const OccupancyPredicate& predicate) {
  if (!state.is_normalized(1e-9)) {
    throw ValidationError("occupancy_sector requires a normalized state");
  }
  StateVector restricted(state.mode_count());
  double weight = 0.0;
  for (const auto& [e, amp] : state.terms()) {
    if (predicate(Occupancy(e.occupancy_bits(), state.mode_count()))) {
      weight += std::norm(amp);
      restricted.add_term(e, amp);
    }
  }
  if (weight <= 0.0) return SectorResult{0.0, StateVector(state.mode_count())};
  const double scale = 1.0 / std::sqrt(weight);
  StateVector normalized(state.mode_count());
  for (const auto& [e, amp] : restricted.terms()) normalized.add_term(e, amp * scale);
  return SectorResult{weight, std::move(normalized)};
}

LiftedSu2 lift_su2(const Eigen::Matrix2cd& u, ModeIndex p, ModeIndex q) {
  if (p == q) throw ValidationError("lift_su2 needs two distinct modes");
  const double defect = (u.adjoint() * u - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
  if (defect > 1e-10) {
    throw ValidationError("lift_su2 requires a unitary matrix (defect " +
                          std::to_string(defect) + ")");
  }
  LiftedSu2 op;
  op.u_ = u;
  op.det_ = u.determinant();
  op.p_ = p;
  op.q_ = q;
  return op;
}

StateVector LiftedSu2::operator()(const StateVector& state) const {
  if (p_ >= state.mode_count() || q_ >= state.mode_count()) {
    throw ConfigError("lifted operator touches modes outside the state's space");
  }
  StateVector out(state.mode_count());
  for (const auto& [e, amp] : state.terms()) {
    const bool np = e.occupied(p_);
    const bool nq = e.occupied(q_);
    if (np == nq) {
      out.add_term(e, np ? det_ * amp : amp);
      continue;
    }
    // One particle in the pair: basis (p occupied, q occupied).
    const FockBasisElement base = e.with_mode_cleared(np ? p_ : q_);
    const int col = np ? 0 : 1;
    out.add_term(base.with_mode_set(p_), u_(0, col) * amp);
    out.add_term(base.with_mode_set(q_), u_(1, col) * amp);
  }
  return out;
}

}  // namespace cohsim
