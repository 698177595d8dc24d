#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "flags/flags.hpp"
#include "polyring/groebner.hpp"

namespace gobelin {

// A scenario file, validated syntactically. Polynomials are kept as text
// (for echoing) and parsed against the declared ring.
struct Scenario {
  std::string name;
  FieldSpec field;
  std::vector<std::string> variables;
  std::vector<std::string> relations;
  // f1, f2, c11, c12, c21, c22 in this order.
  std::vector<std::string> data = std::vector<std::string>(6);
  std::size_t max_degree = 8;
  std::uint64_t seed = 0;
  // `#@ key value` lines, in file order.
  std::vector<std::pair<std::string, std::string>> annotations;

  std::string annotation(const std::string& key) const;  // empty if absent
  std::string to_text() const;
};

extern const char* const kDataKeys[6];

// ParseError (line, column) on malformed input.
Scenario parse_scenario(const std::string& text, const std::string& name = "scenario");
Scenario load_scenario(const std::string& path);

// Everything derived from a scenario that the suites share.
struct Instance {
  Scenario scenario;
  QuotientRing ring;
  TraceMap trace;
  SyzygyPair pair;
  KoszulData koszul;

  const FiniteAlgebra& algebra() const { return *ring.algebra(); }
};

// Builds the algebra and checks every hypothesis: zero-dimensional, local
// Gorenstein, f1 and f2 non-units, both syzygy rows vanish.
Instance instantiate(const Scenario& sc);

struct Diagnostics {
  std::size_t mu = 0, nu = 0, nu1 = 0, nu2 = 0, tau1_dim = 0, tau2_dim = 0;
};
Diagnostics diagnostics(const Instance& in);

}  // namespace gobelin
