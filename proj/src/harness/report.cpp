#include "harness/report.hpp"

#include <algorithm>

namespace gobelin {

using nlohmann::json;

json scenario_json(const Scenario& sc) {
  json j;
  j["name"] = sc.name;
  j["field"] = sc.field.is_rational() ? std::string("Q") : "Fp " + std::to_string(sc.field.characteristic());
  j["variables"] = sc.variables;
  j["relations"] = sc.relations;
  for (int i = 0; i < 6; ++i) j[kDataKeys[i]] = sc.data[i];
  j["max_degree"] = sc.max_degree;
  j["seed"] = sc.seed;
  json ann = json::object();
  for (const auto& [k, v] : sc.annotations) ann[k] = v;
  j["annotations"] = ann;
  return j;
}

json diagnostics_json(const Diagnostics& d) {
  return {{"mu", d.mu}, {"nu", d.nu}, {"nu1", d.nu1}, {"nu2", d.nu2}, {"tau1_dim", d.tau1_dim}, {"tau2_dim", d.tau2_dim}};
}

json flags_json(const FlagReport& fr) {
  return {{"L", fr.L.dims()},
          {"F", fr.F.dims()},
          {"Lp", fr.Lp.dims()},
          {"Fp", fr.Fp.dims()},
          {"stab", {{"L", fr.L.stab}, {"F", fr.F.stab}, {"Lp", fr.Lp.stab}, {"Fp", fr.Fp.stab}}}};
}

json verdict_json(const SuiteVerdict& v) {
  std::vector<Check> checks = v.checks;
  std::stable_sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
  json arr = json::array();
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  }
  json notes = json::object();
  for (const auto& [k, val] : v.notes) notes[k] = val;
  return {{"name", v.name}, {"checks", arr}, {"pass", v.pass}, {"notes", notes}};
}

json build_report(const Instance& in, const Computed& c, std::vector<SuiteVerdict> verdicts, double seconds) {
  std::sort(verdicts.begin(), verdicts.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  json suites = json::array();
  for (const auto& v : verdicts) suites.push_back(verdict_json(v));
  json j;
  j["version"] = kToolVersion;
  j["scenario"] = scenario_json(in.scenario);
  j["diagnostics"] = diagnostics_json(diagnostics(in));
  j["hyper"] = {{"g1", c.g1.dims()}, {"g2", c.g2.dims()}, {"g1_dual", c.g1_dual.dims()}, {"g2_dual", c.g2_dual.dims()}};
  j["flags"] = flags_json(c.flags);
  j["suites"] = suites;
  j["timing"] = {{"seconds", seconds}};
  return j;
}

}  // namespace gobelin
