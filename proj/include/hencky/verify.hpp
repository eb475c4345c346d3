#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hencky {

struct CheckResult {
  std::string name;
  double measured = 0;  // worst observed deviation (or value, for lower bounds)
  double bound = 0;
  bool passed = false;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool all_passed() const;
};

inline constexpr std::uint64_t kDefaultVerifySeed = 0x48656e636b79ULL;

/// Runs the invariant and oracle checks of every module with randomized
/// sweeps drawn from a 64-bit Mersenne Twister seeded with `seed`.
VerifyReport run_verification(std::uint64_t seed = kDefaultVerifySeed);

}  // namespace hencky
