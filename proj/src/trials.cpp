#include "cohsim/trials.hpp"

#include <cmath>
#include <ostream>
#include <random>

namespace cohsim {

namespace {

// 53-bit uniform double in [0, 1). Avoids the library distribution
// objects so the sampled stream is pinned by the engine alone.
double next_unit(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

TrialLog simulate_game(const ConditionalDistribution& dist, std::size_t n, std::uint64_t seed) {
  if (n < 1) throw ValidationError("trial count must be at least 1");
  std::mt19937_64 eng(seed);
  std::vector<GameRound> rounds;
  rounds.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double ui = next_unit(eng);
    int pair = static_cast<int>(ui * 4.0);
    if (pair > 3) pair = 3;
    const int x = pair >> 1;
    const int y = pair & 1;

    const double uo = next_unit(eng);
    double cumulative = 0.0;
    int outcome = 3;
    for (int k = 0; k < 4; ++k) {
      cumulative += dist.p(k >> 1, k & 1, x, y);
      if (uo < cumulative) {
        outcome = k;
        break;
      }
    }
    const int a = outcome >> 1;
    const int b = outcome & 1;
    rounds.push_back(GameRound{static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(y),
                               static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                               (a ^ b) == (x ^ y)});
  }
  return TrialLog(seed, std::move(rounds));
}

double relative_frequency(const TrialLog& log) {
  if (log.size() == 0) throw ValidationError("cannot take the frequency of an empty log");
  std::size_t wins = 0;
  for (const GameRound& r : log.rounds()) wins += r.win ? 1 : 0;
  return static_cast<double>(wins) / static_cast<double>(log.size());
}

double azuma_bound(std::uint64_t n, double epsilon) {
  if (epsilon < 0.0) throw ValidationError("epsilon must be non-negative");
  return 2.0 * std::exp(-2.0 * static_cast<double>(n) * epsilon * epsilon);
}

SignificanceReport significance(const TrialLog& log, double alpha) {
  SignificanceReport report;
  report.n = log.size();
  report.f_n = relative_frequency(log);
  report.epsilon = std::abs(report.f_n - 0.5);
  report.bound_raw = azuma_bound(log.size(), report.epsilon);
  report.bound = std::min(1.0, report.bound_raw);
  const double exponent = 2.0 * static_cast<double>(log.size()) * report.epsilon * report.epsilon;
  report.log10_bound_raw = std::log10(2.0) - exponent / std::log(10.0);
  report.alpha = alpha;
  report.rejected = report.bound < alpha;
  return report;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master ^ splitmix64(index + 1));
}

void write_csv(const TrialLog& log, std::ostream& out) {
  out << "round,x,y,a,b,win\n";
  std::size_t i = 0;
  for (const GameRound& r : log.rounds()) {
    out << i++ << ',' << int(r.x) << ',' << int(r.y) << ',' << int(r.a) << ',' << int(r.b)
        << ',' << int(r.win) << '\n';
  }
}

}  // namespace cohsim
