#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace g2mae::selftest {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

/// Runs every internal certificate: structure constants (sl2 triple),
/// pairing invariance, dimension ladder, re-substitution of named forms,
/// catalogue cross-checks, symplectic certificates for tau and xi, and the
/// classification counts. Cheap enough to run on every CLI invocation.
std::vector<CheckResult> run_all(std::uint64_t seed);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace g2mae::selftest
