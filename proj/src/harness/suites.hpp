#pragma once

#include "harness/scenario.hpp"

namespace gobelin {

struct SuiteVerdict {
  std::string name;
  std::vector<Check> checks;
  bool pass = false;
  // Extra facts a suite records, such as which prime placement held.
  std::vector<std::pair<std::string, std::string>> notes;
};

// Complexes and flags of an instance, built once to the scenario's degree.
struct Computed {
  GobelinComplex g1, g2, g1_dual, g2_dual;
  FlagReport flags;
};
Computed compute_all(const Instance& in);

const std::vector<std::string>& suite_names();
// "expect" is also accepted: it checks `#@` annotations and family claims.
SuiteVerdict run_suite(const Instance& in, const Computed& c, const std::string& suite);

// Family claims, keyed by the family name recorded in the scenario.
std::vector<Check> family_checks(const Instance& in, const Computed& c);

// dim H_{j+2}(G2) - dim H_j(G2) constant per parity for j in [2 stab, J - 2].
std::vector<Check> stable_difference(const Computed& c);
// The printed low-degree differentials of G2, entry by entry.
std::vector<Check> golden_differentials(const Instance& in, const Computed& c);

}  // namespace gobelin
