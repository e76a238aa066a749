#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include <Eigen/Dense>

#include "cohsim/errors.hpp"

namespace cohsim {

using Complex = std::complex<double>;

/// Exchange statistics of the particles populating a Fock space.
enum class Statistics { Boson, Fermion };

const char* to_string(Statistics stats);

using ModeIndex = std::size_t;

/// Hard cap on the number of modes. Keeps the occupancy pattern in one
/// byte and the dense basis at 256 elements.
inline constexpr std::size_t kMaxModes = 8;

/// Occupation pattern over the modes of a space, one bit per mode.
class Occupancy {
 public:
  Occupancy(std::uint32_t bits, std::size_t mode_count)
      : bits_(bits), mode_count_(mode_count) {}

  bool occupied(ModeIndex m) const { return (bits_ >> m) & 1u; }
  std::size_t total() const { return static_cast<std::size_t>(__builtin_popcount(bits_)); }

  /// Number of occupied modes among the given ones.
  std::size_t count_in(std::initializer_list<ModeIndex> modes) const {
    std::size_t n = 0;
    for (ModeIndex m : modes) n += occupied(m) ? 1 : 0;
    return n;
  }

  std::uint32_t bits() const { return bits_; }
  std::size_t mode_count() const { return mode_count_; }

 private:
  std::uint32_t bits_;
  std::size_t mode_count_;
};

using OccupancyPredicate = std::function<bool(const Occupancy&)>;

/// Basis ket of the engine: binary mode occupancies plus a record of how
/// many particles each blocker has absorbed. Loss records are kept per
/// mode because absorption events at different blockers populate
/// orthogonal environment states; branches with distinct loss patterns
/// never interfere.
class FockBasisElement {
 public:
  FockBasisElement() = default;

  static FockBasisElement with_occupancy(std::uint32_t bits) {
    FockBasisElement e;
    e.bits_ = bits;
    return e;
  }

  bool occupied(ModeIndex m) const { return (bits_ >> m) & 1u; }
  std::uint32_t occupancy_bits() const { return bits_; }
  std::size_t occupancy_total() const {
    return static_cast<std::size_t>(__builtin_popcount(bits_));
  }

  /// Total number of absorbed particles across all blockers.
  std::size_t absorbed() const {
    std::size_t n = 0;
    for (auto c : losses_) n += c;
    return n;
  }
  std::uint8_t losses_at(ModeIndex m) const { return losses_[m]; }

  /// Conserved by everything except creation.
  std::size_t particle_total() const { return occupancy_total() + absorbed(); }

  FockBasisElement with_mode_set(ModeIndex m) const {
    FockBasisElement e = *this;
    e.bits_ |= (1u << m);
    return e;
  }
  FockBasisElement with_mode_cleared(ModeIndex m) const {
    FockBasisElement e = *this;
    e.bits_ &= ~(1u << m);
    return e;
  }
  FockBasisElement with_mode_absorbed(ModeIndex m) const {
    FockBasisElement e = *this;
    e.bits_ &= ~(1u << m);
    e.losses_[m] = static_cast<std::uint8_t>(e.losses_[m] + 1);
    return e;
  }

  auto operator<=>(const FockBasisElement&) const = default;

 private:
  std::uint32_t bits_ = 0;
  std::array<std::uint8_t, kMaxModes> losses_{};
};

/// Pure state over the occupation-number basis: a sparse map from basis
/// element to complex amplitude. Immutable value type; every operation
/// returns a fresh state.
class StateVector {
 public:
  using AmplitudeMap = std::map<FockBasisElement, Complex>;

  explicit StateVector(std::size_t mode_count) : mode_count_(mode_count) {}

  std::size_t mode_count() const { return mode_count_; }
  const AmplitudeMap& terms() const { return amps_; }
  std::size_t term_count() const { return amps_.size(); }

  Complex amplitude(const FockBasisElement& e) const {
    auto it = amps_.find(e);
    return it == amps_.end() ? Complex(0.0, 0.0) : it->second;
  }

  double squared_norm() const;
  double norm() const;
  bool is_normalized(double tol = 1e-12) const;
  StateVector normalized() const;

  /// Accumulates into the map, dropping terms that cancel to exactly zero.
  void add_term(const FockBasisElement& e, Complex amp);

  bool empty() const { return amps_.empty(); }

 private:
  std::size_t mode_count_;
  AmplitudeMap amps_;
};

bool approx_equal(const StateVector& a, const StateVector& b, double tol = 1e-12);

/// All-modes-empty state with unit amplitude. mode_count in [1, 8].
StateVector make_vacuum(std::size_t mode_count);

/// Statistics-aware creation operator. Fermionic creation on an occupied
/// mode annihilates the component (exclusion); bosonic creation on an
/// occupied mode throws, since double occupancy is outside the engine's
/// regime. The fermionic sign is (-1)^(occupied modes below the target)
/// in the canonical mode ordering.
StateVector apply_creation(const StateVector& state, ModeIndex mode, Statistics stats);

/// Absorbing barrier on one mode: occupied components lose their particle
/// to that blocker's environment, amplitudes unchanged. Linear, norm
/// preserving, idempotent.
StateVector apply_blocker(const StateVector& state, ModeIndex mode);

struct SectorResult {
  double probability = 0.0;
  StateVector state;
};

/// Probability weight of the components whose occupancy pattern satisfies
/// the predicate (summed over loss patterns), together with the
/// renormalized restriction. Zero-weight sectors come back empty.
SectorResult occupancy_sector(const StateVector& state, const OccupancyPredicate& predicate);

/// Fock-space lift of a 2x2 unitary acting on one mode pair: identity on
/// the empty sector, the matrix itself on the one-particle sector of the
/// pair, det(u) on the doubly occupied sector. Same form for both
/// statistics.
class LiftedSu2 {
 public:
  StateVector operator()(const StateVector& state) const;

  const Eigen::Matrix2cd& matrix() const { return u_; }
  ModeIndex first_mode() const { return p_; }
  ModeIndex second_mode() const { return q_; }

 private:
  friend LiftedSu2 lift_su2(const Eigen::Matrix2cd& u, ModeIndex p, ModeIndex q);

  Eigen::Matrix2cd u_;
  Complex det_;
  ModeIndex p_ = 0;
  ModeIndex q_ = 0;
};

/// Validates unitarity (tolerance 1e-10) and mode distinctness.
LiftedSu2 lift_su2(const Eigen::Matrix2cd& u, ModeIndex p, ModeIndex q);

}  // namespace cohsim
