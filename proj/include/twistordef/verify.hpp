#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace twistordef {

struct VerificationCheck {
  std::string name;
  int n = 0;
  bool passed = false;
  std::string detail;
};

struct VerificationResult {
  int n_from = 0;
  int n_to = 0;
  std::vector<VerificationCheck> checks;
  /// One schema-conforming report document per n.
  std::vector<nlohmann::json> reports;

  bool all_passed() const;
  nlohmann::json to_json() const;
};

/// Runs the invariant suite for every n in [n_from, n_to]; n_from >= 3.
VerificationResult run_verification(int n_from, int n_to, std::uint64_t seed = 1,
                                    int samples_per_n = 5);

}  // namespace twistordef
