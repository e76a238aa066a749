#pragma once

#include <array>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cohsim/errors.hpp"

namespace cohsim {

struct CoherenceReport {
  std::array<double, 4> interference{};  // I_ab indexed by 2a+b
  double p_win = 0.0;
};

/// Conditional distribution p(ab|xy) of the two output bits given the two
/// blocker settings. Normalized per input pair; validated on construction.
class ConditionalDistribution {
 public:
  /// Row-major 4x4 table: row = 2x+y, column = 2a+b.
  static ConditionalDistribution from_table(const std::array<double, 16>& table);
  static ConditionalDistribution uniform();

  double p(int a, int b, int x, int y) const { return table_[index(a, b, x, y)]; }
  const std::array<double, 16>& table() const { return table_; }

  /// Signed sum over blocker settings: sum_{x,y} (-1)^(x xor y) p(ab|xy).
  double interference_term(int a, int b) const;

  /// Success probability of the parity game a xor b = x xor y under
  /// uniformly random inputs. Cross-checked internally against the
  /// identity p_win = 1/2 + (I_00 + I_11)/4.
  double win_probability() const;

  CoherenceReport coherence_report() const;

  std::string to_json_string() const;
  static ConditionalDistribution from_json_string(const std::string& text);
  std::string to_csv_string() const;
  static ConditionalDistribution from_csv_string(const std::string& text);

  static constexpr std::size_t index(int a, int b, int x, int y) {
    return static_cast<std::size_t>(((x * 2 + y) * 2 + a) * 2 + b);
  }

 private:
  ConditionalDistribution() = default;
  std::array<double, 16> table_{};
};

/// Convex mixture of distributions. Weights must be non-negative and sum
/// to 1 within 1e-12.
ConditionalDistribution mix(
    std::span<const std::pair<double, ConditionalDistribution>> components);

/// One response function per output, each depending on the single bit the
/// active branch carries.
struct OneBitResponses {
  std::array<int, 2> a{0, 0};  // a = a_map[received bit]
  std::array<int, 2> b{0, 0};
};

/// One-way-signaling strategy: the carrier reaches Alice with weight
/// lambda_sa (both outputs then depend on x only) or Bob with weight
/// lambda_sb (both outputs depend on y only).
struct ClassicalStrategy {
  double lambda_sa = 1.0;
  double lambda_sb = 0.0;
  OneBitResponses at_a;  // branch S-A, responses to x
  OneBitResponses at_b;  // branch S-B, responses to y

  void validate() const;
};

ConditionalDistribution strategy_distribution(const ClassicalStrategy& s);

/// Shared randomness as an explicit finite mixture of strategies.
struct MixedStrategy {
  std::vector<std::pair<double, ClassicalStrategy>> components;
};

ConditionalDistribution strategy_distribution(const MixedStrategy& s);

/// The 32 extremal strategies: branch choice times the 4x4 response
/// functions of the active branch.
std::vector<ClassicalStrategy> enumerate_deterministic_strategies();

/// Output 1 exactly when a particle arrives: the simplest way to play.
ClassicalStrategy detection_strategy(double lambda_sa);

}  // namespace cohsim
