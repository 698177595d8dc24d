#pragma once

#include "json.hpp"

#include "harness/suites.hpp"

namespace gobelin {

inline constexpr const char* kToolVersion = "1.0.0";

nlohmann::json scenario_json(const Scenario& sc);
nlohmann::json diagnostics_json(const Diagnostics& d);
nlohmann::json flags_json(const FlagReport& fr);
nlohmann::json verdict_json(const SuiteVerdict& v);

// Full report. Suites are sorted by name and checks by name (stable), so
// two runs differ only in "timing".
nlohmann::json build_report(const Instance& in, const Computed& c, std::vector<SuiteVerdict> verdicts,
                            double seconds);

}  // namespace gobelin
