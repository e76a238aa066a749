#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "cohsim/errors.hpp"
#include "cohsim/game.hpp"

namespace cohsim {

struct GameRound {
  std::uint8_t x, y, a, b;
  bool win;  // a xor b == x xor y
};

/// Seeded record of repeated game rounds. Same seed, same distribution,
/// same log, bit for bit.
class TrialLog {
 public:
  TrialLog(std::uint64_t seed, std::vector<GameRound> rounds)
      : seed_(seed), rounds_(std::move(rounds)) {}

  std::uint64_t seed() const { return seed_; }
  std::size_t size() const { return rounds_.size(); }
  const std::vector<GameRound>& rounds() const { return rounds_; }

 private:
  std::uint64_t seed_;
  std::vector<GameRound> rounds_;
};

/// n rounds of the game: (x,y) uniform over the four input pairs, (a,b)
/// by inverse CDF over the fixed outcome order 00, 01, 10, 11.
TrialLog simulate_game(const ConditionalDistribution& dist, std::size_t n, std::uint64_t seed);

/// Mean win flag F_N. Errors on an empty log.
double relative_frequency(const TrialLog& log);

/// Two-sided concentration bound 2 exp(-2 n epsilon^2) on the deviation
/// of the win frequency from 1/2 under any classical strategy.
double azuma_bound(std::uint64_t n, double epsilon);

struct SignificanceReport {
  std::size_t n = 0;
  double f_n = 0.0;
  double epsilon = 0.0;     // |F_N - 1/2|
  double bound_raw = 0.0;   // 2 exp(-2 n epsilon^2)
  double bound = 0.0;       // min(1, bound_raw)
  double log10_bound_raw = 0.0;  // computed analytically, never underflows
  double alpha = 0.0;
  bool rejected = false;  // bound < alpha
};

/// Tail probability of the observed deviation under the classical
/// hypothesis; flags rejection when it drops below alpha.
SignificanceReport significance(const TrialLog& log, double alpha = 0.01);

/// Independent per-worker seed derived from a master seed, so batch runs
/// are schedule independent.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Columns: round,x,y,a,b,win.
void write_csv(const TrialLog& log, std::ostream& out);

}  // namespace cohsim
