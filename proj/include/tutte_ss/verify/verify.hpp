#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tutte_ss {

struct VerificationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerificationOptions {
  // Requested top level; each check clamps it to what it can afford.
  int max_level = 2;
  std::uint64_t seed = 1;
  // Nonzero corrupts one recursion coefficient so the suite can show it
  // notices. Test harness only.
  long perturb = 0;
};

// Oracle-vs-recursion comparisons, closed forms, the join and hyperbola
// identities and the 2^|E| identities.
std::vector<VerificationCheck> run_verification(const VerificationOptions& options);

bool all_passed(const std::vector<VerificationCheck>& checks);

}  // namespace tutte_ss
