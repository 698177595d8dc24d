#pragma once

#include "harness/scenario.hpp"

namespace gobelin {

// The base scenario supplies field, ring, relations, f1, f2, max_degree and
// seed; its syzygy lines are ignored.
struct FamilyParams {
  Scenario base;
  std::string tau2[2];      // one_zero, g_multiple
  std::string g;            // g_multiple
  std::size_t homologous = 2;  // zero_syzygies: extra scenarios with tau_i = b_i (-f2, f1)
};

const std::vector<std::string>& family_names();

// Generated scenarios carry `#@ family`, `#@ expect_g2` and, for g_multiple,
// `#@ g` and `#@ expect_stab` annotations. Hypothesis failures of the
// generated data propagate as the usual errors.
std::vector<Scenario> family(const std::string& name, const FamilyParams& p);

}  // namespace gobelin
