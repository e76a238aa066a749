#pragma once

#include <optional>
#include <string>

namespace cohsim {

struct ReproduceOutcome {
  bool all_pass = false;
  std::string json_text;  // consolidated claim table
};

/// Recomputes the headline numbers (classical 1/2, shared-ancilla 9/16
/// and 7/16, post-selection rates, single-particle 5/8, interference
/// patterns, the fermionic refusal, and a significance demonstration at
/// n = 1e5) and checks each against its expected value. tamper_claim, if
/// set, perturbs that claim's computed value; unknown ids are an error.
ReproduceOutcome run_reproduce(std::uint64_t trial_seed,
                               const std::optional<std::string>& tamper_claim = std::nullopt);

}  // namespace cohsim
