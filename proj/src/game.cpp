#include "cohsim/game.hpp"

#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

namespace cohsim {

namespace {
constexpr double kProbTol = 1e-12;
}

ConditionalDistribution ConditionalDistribution::from_table(const std::array<double, 16>& table) {
  for (double v : table) {
    if (!(v >= -kProbTol) || !std::isfinite(v)) {
      throw ValidationError("conditional distribution has a negative or non-finite entry");
    }
  }
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      double sum = 0.0;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) sum += table[index(a, b, x, y)];
      if (std::abs(sum - 1.0) > kProbTol) {
        throw ValidationError("conditional distribution rows must sum to 1 per input pair");
      }
    }
  }
  ConditionalDistribution d;
  d.table_ = table;
  return d;
}

ConditionalDistribution ConditionalDistribution::uniform() {
  std::array<double, 16> t{};
  t.fill(0.25);
  return from_table(t);
}

double ConditionalDistribution::interference_term(int a, int b) const {
  double sum = 0.0;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const double sign = ((x ^ y) != 0) ? -1.0 : 1.0;
      sum += sign * p(a, b, x, y);
    }
  }
  return sum;
}

double ConditionalDistribution::win_probability() const {
  double direct = 0.0;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          if ((a ^ b) == (x ^ y)) direct += p(a, b, x, y);
        }
      }
    }
  }
  direct *= 0.25;
  const double via_identity =
      0.5 + 0.25 * (interference_term(0, 0) + interference_term(1, 1));
  if (std::abs(direct - via_identity) > kProbTol) {
    throw ValidationError("win-probability identity violated; table is inconsistent");
  }
  return direct;
}

CoherenceReport ConditionalDistribution::coherence_report() const {
  CoherenceReport r;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) r.interference[static_cast<std::size_t>(2 * a + b)] = interference_term(a, b);
  r.p_win = win_probability();
  return r;
}

std::string ConditionalDistribution::to_json_string() const {
  nlohmann::json rows = nlohmann::json::array();
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      nlohmann::json row = nlohmann::json::array();
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) row.push_back(p(a, b, x, y));
      rows.push_back(row);
    }
  }
  nlohmann::json doc{{"schema_version", 1}, {"p", rows}};
  return doc.dump();
}

ConditionalDistribution ConditionalDistribution::from_json_string(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("bad distribution JSON: ") + e.what());
  }
  if (!doc.contains("p") || !doc["p"].is_array() || doc["p"].size() != 4) {
    throw ValidationError("distribution JSON needs a 4x4 \"p\" array");
  }
  std::array<double, 16> t{};
  for (int row = 0; row < 4; ++row) {
    const auto& r = doc["p"][static_cast<std::size_t>(row)];
    if (!r.is_array() || r.size() != 4) {
      throw ValidationError("distribution JSON needs a 4x4 \"p\" array");
    }
    for (int col = 0; col < 4; ++col) {
      const int x = row >> 1, y = row & 1, a = col >> 1, b = col & 1;
      t[index(a, b, x, y)] = r[static_cast<std::size_t>(col)].get<double>();
    }
  }
  return from_table(t);
}

std::string ConditionalDistribution::to_csv_string() const {
  std::ostringstream out;
  out.precision(17);
  out << "x,y,a,b,p\n";
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          out << x << ',' << y << ',' << a << ',' << b << ',' << p(a, b, x, y) << '\n';
  return out.str();
}

ConditionalDistribution ConditionalDistribution::from_csv_string(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw ValidationError("empty distribution CSV");
  std::array<double, 16> t{};
  std::array<bool, 16> seen{};
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    int x, y, a, b;
    double v;
    char c1, c2, c3, c4;
    if (!(row >> x >> c1 >> y >> c2 >> a >> c3 >> b >> c4 >> v) || c1 != ',' || c2 != ',' ||
        c3 != ',' || c4 != ',') {
      throw ValidationError("bad distribution CSV row: " + line);
    }
    if (x < 0 || x > 1 || y < 0 || y > 1 || a < 0 || a > 1 || b < 0 || b > 1) {
      throw ValidationError("distribution CSV bits must be 0 or 1");
    }
    const std::size_t i = index(a, b, x, y);
    if (seen[i]) throw ValidationError("duplicate distribution CSV row: " + line);
    seen[i] = true;
    t[i] = v;
  }
  for (bool s : seen) {
    if (!s) throw ValidationError("distribution CSV is missing rows");
  }
  return from_table(t);
}

ConditionalDistribution mix(
    std::span<const std::pair<double, ConditionalDistribution>> components) {
  if (components.empty()) throw ValidationError("cannot mix an empty component list");
  double total = 0.0;
  std::array<double, 16> t{};
  for (const auto& [w, d] : components) {
    if (w < -kProbTol) throw ValidationError("mixture weights must be non-negative");
    total += w;
    for (std::size_t i = 0; i < 16; ++i) t[i] += w * d.table()[i];
  }
  if (std::abs(total - 1.0) > kProbTol) {
    throw ValidationError("mixture weights must sum to 1");
  }
  return ConditionalDistribution::from_table(t);
}

void ClassicalStrategy::validate() const {
  if (lambda_sa < 0.0 || lambda_sb < 0.0 || std::abs(lambda_sa + lambda_sb - 1.0) > kProbTol) {
    throw ValidationError("branch weights must be non-negative and sum to 1");
  }
  for (int v : {at_a.a[0], at_a.a[1], at_a.b[0], at_a.b[1], at_b.a[0], at_b.a[1], at_b.b[0],
                at_b.b[1]}) {
    if (v != 0 && v != 1) throw ValidationError("responses must be bits");
  }
}

ConditionalDistribution strategy_distribution(const ClassicalStrategy& s) {
  s.validate();
  std::array<double, 16> t{};
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      t[ConditionalDistribution::index(s.at_a.a[x], s.at_a.b[x], x, y)] += s.lambda_sa;
      t[ConditionalDistribution::index(s.at_b.a[y], s.at_b.b[y], x, y)] += s.lambda_sb;
    }
  }
  return ConditionalDistribution::from_table(t);
}

ConditionalDistribution strategy_distribution(const MixedStrategy& s) {
  std::vector<std::pair<double, ConditionalDistribution>> parts;
  parts.reserve(s.components.size());
  for (const auto& [w, strat] : s.components) {
    parts.emplace_back(w, strategy_distribution(strat));
  }
  return mix(parts);
}

std::vector<ClassicalStrategy> enumerate_deterministic_strategies() {
  // The four functions {0,1} -> {0,1}, indexed by (f(0), f(1)).
  std::vector<ClassicalStrategy> out;
  out.reserve(32);
  for (int branch = 0; branch < 2; ++branch) {
    for (int fa = 0; fa < 4; ++fa) {
      for (int fb = 0; fb < 4; ++fb) {
        ClassicalStrategy s;
        s.lambda_sa = branch == 0 ? 1.0 : 0.0;
        s.lambda_sb = 1.0 - s.lambda_sa;
        OneBitResponses r;
        r.a = {fa & 1, (fa >> 1) & 1};
        r.b = {fb & 1, (fb >> 1) & 1};
        (branch == 0 ? s.at_a : s.at_b) = r;
        out.push_back(s);
      }
    }
  }
  return out;
}

ClassicalStrategy detection_strategy(double lambda_sa) {
  ClassicalStrategy s;
  s.lambda_sa = lambda_sa;
  s.lambda_sb = 1.0 - lambda_sa;
  s.at_a.a = {1, 0};  // particle seen iff the blocker was open
  s.at_a.b = {0, 0};
  s.at_b.a = {0, 0};
  s.at_b.b = {1, 0};
  s.validate();
  return s;
}

}  // namespace cohsim
