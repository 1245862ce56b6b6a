#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace irfield {

struct VerificationItem {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// Full eikonal-combinatorics and smearing property suites, seeded. Every
// item records the worst observed deviation against its tolerance; the same
// items back the verify-identities command and the test suites.
std::vector<VerificationItem> verify_identities(std::uint64_t seed, unsigned n_max = 7,
                                                std::size_t instances = 1000);

}  // namespace irfield
