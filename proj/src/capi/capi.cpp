#include "gobelin/gobelin.h"

#include <algorithm>
#include <chrono>
#include <cstring>
#include <optional>

#include "harness/families.hpp"
#include "harness/report.hpp"

using namespace gobelin;
using nlohmann::json;

struct gob_scenario {
  Scenario sc;
  std::optional<Instance> instance;
  std::optional<Computed> computed;
};

namespace {

thread_local std::string last_error;
thread_local std::size_t last_line = 0;
thread_local std::size_t last_column = 0;

gob_status status_of(ErrorKind k) {
  switch (k) {
    case ErrorKind::Input: return GOB_ERR_INPUT;
    case ErrorKind::NotZeroDimensional: return GOB_ERR_NOT_ZERO_DIMENSIONAL;
    case ErrorKind::NotGorenstein: return GOB_ERR_NOT_GORENSTEIN;
    case ErrorKind::UnitElement: return GOB_ERR_UNIT_ELEMENT;
    case ErrorKind::SyzygyViolation: return GOB_ERR_SYZYGY_VIOLATION;
    case ErrorKind::ComplexBroken: return GOB_ERR_COMPLEX_BROKEN;
    case ErrorKind::NotChainCompatible: return GOB_ERR_NOT_CHAIN_COMPATIBLE;
    case ErrorKind::NotACycle: return GOB_ERR_NOT_A_CYCLE;
    case ErrorKind::NotStabilized: return GOB_ERR_NOT_STABILIZED;
  }
  return GOB_ERR_INTERNAL;
}

void clear_error() {
  last_error.clear();
  last_line = last_column = 0;
}

template <class F>
gob_status guarded(F&& body) {
  clear_error();
  try {
    body();
    return GOB_OK;
  } catch (const ParseError& e) {
    last_error = e.what();
    last_line = e.line();
    last_column = e.column();
    return GOB_ERR_INPUT;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const json::exception& e) {
    last_error = std::string("bad parameters: ") + e.what();
    return GOB_ERR_INPUT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return GOB_ERR_INTERNAL;
  }
}

gob_status invalid(const char* what) {
  clear_error();
  last_error = what;
  return GOB_ERR_INPUT;
}

char* dup(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

const Instance& instance(gob_scenario* sc) {
  if (!sc->instance) sc->instance.emplace(instantiate(sc->sc));
  return *sc->instance;
}

const Computed& computed(gob_scenario* sc) {
  if (!sc->computed) sc->computed.emplace(compute_all(instance(sc)));
  return *sc->computed;
}

json flag_terms(const FiniteAlgebra& b, const Flag& f) {
  json terms = json::array();
  for (const auto& t : f.terms) {
    json gens = json::array();
    for (const auto& v : t.space.vectors()) gens.push_back(b.format(v));
    terms.push_back(gens);
  }
  return terms;
}

}  // namespace

extern "C" {

const char* gob_version(void) { return kToolVersion; }

const char* gob_status_name(gob_status s) {
  switch (s) {
    case GOB_OK: return "ok";
    case GOB_ERR_INPUT: return "input error";
    case GOB_ERR_NOT_ZERO_DIMENSIONAL: return to_string(ErrorKind::NotZeroDimensional);
    case GOB_ERR_NOT_GORENSTEIN: return to_string(ErrorKind::NotGorenstein);
    case GOB_ERR_UNIT_ELEMENT: return to_string(ErrorKind::UnitElement);
    case GOB_ERR_SYZYGY_VIOLATION: return to_string(ErrorKind::SyzygyViolation);
    case GOB_ERR_COMPLEX_BROKEN: return to_string(ErrorKind::ComplexBroken);
    case GOB_ERR_NOT_CHAIN_COMPATIBLE: return to_string(ErrorKind::NotChainCompatible);
    case GOB_ERR_NOT_A_CYCLE: return to_string(ErrorKind::NotACycle);
    case GOB_ERR_NOT_STABILIZED: return to_string(ErrorKind::NotStabilized);
    case GOB_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* gob_last_error(void) { return last_error.c_str(); }
size_t gob_last_error_line(void) { return last_line; }
size_t gob_last_error_column(void) { return last_column; }

gob_status gob_scenario_parse(const char* text, const char* name, gob_scenario** out) {
  if (!text || !out) return invalid("gob_scenario_parse: null argument");
  return guarded([&] { *out = new gob_scenario{parse_scenario(text, name ? name : "scenario"), {}, {}}; });
}

gob_status gob_scenario_load(const char* path, gob_scenario** out) {
  if (!path || !out) return invalid("gob_scenario_load: null argument");
  return guarded([&] { *out = new gob_scenario{load_scenario(path), {}, {}}; });
}

void gob_scenario_free(gob_scenario* sc) { delete sc; }

gob_status gob_scenario_text(const gob_scenario* sc, char** out) {
  if (!sc || !out) return invalid("gob_scenario_text: null argument");
  return guarded([&] { *out = dup(sc->sc.to_text()); });
}

gob_status gob_scenario_name(const gob_scenario* sc, char** out) {
  if (!sc || !out) return invalid("gob_scenario_name: null argument");
  return guarded([&] { *out = dup(sc->sc.name); });
}

gob_status gob_scenario_set_max_degree(gob_scenario* sc, size_t max_degree) {
  if (!sc) return invalid("gob_scenario_set_max_degree: null argument");
  if (max_degree > 64) return invalid("max_degree above 64");
  return guarded([&] {
    sc->sc.max_degree = max_degree;
    if (sc->instance) sc->instance->scenario.max_degree = max_degree;
    sc->computed.reset();
  });
}

gob_status gob_check(gob_scenario* sc, gob_diagnostics* out) {
  if (!sc) return invalid("gob_check: null argument");
  return guarded([&] {
    const Diagnostics d = diagnostics(instance(sc));
    if (out) *out = {d.mu, d.nu, d.nu1, d.nu2, d.tau1_dim, d.tau2_dim};
  });
}

gob_status gob_hyper_dims(gob_scenario* sc, gob_complex which, int dual, size_t* dims, size_t capacity,
                          size_t* count) {
  if (!sc) return invalid("gob_hyper_dims: null argument");
  if (which != GOB_G1 && which != GOB_G2) return invalid("gob_hyper_dims: complex must be GOB_G1 or GOB_G2");
  return guarded([&] {
    const Instance& in = instance(sc);
    std::vector<std::size_t> d;
    if (sc->computed) {
      const Computed& c = *sc->computed;
      d = which == GOB_G1 ? (dual ? c.g1_dual : c.g1).dims() : (dual ? c.g2_dual : c.g2).dims();
    } else {
      const GobelinComplex g = which == GOB_G1 ? build_g1(in.pair, sc->sc.max_degree) : build_g2(in.pair, sc->sc.max_degree);
      d = dual ? dual_of(g).dims() : g.dims();
    }
    if (count) *count = d.size();
    for (std::size_t i = 0; i < d.size() && i < capacity && dims; ++i) dims[i] = d[i];
  });
}

gob_status gob_flags_json(gob_scenario* sc, char** out) {
  if (!sc || !out) return invalid("gob_flags_json: null argument");
  return guarded([&] {
    const Instance& in = instance(sc);
    const FlagReport fr = compute_flags(in.pair, in.koszul);
    json j = flags_json(fr);
    const FiniteAlgebra& b = in.algebra();
    j["basis"] = {{"L", flag_terms(b, fr.L)}, {"F", flag_terms(b, fr.F)}, {"Lp", flag_terms(b, fr.Lp)},
                  {"Fp", flag_terms(b, fr.Fp)}};
    *out = dup(j.dump(2));
  });
}

gob_status gob_verify_json(gob_scenario* sc, const char* suite, int* all_pass, char** out) {
  if (!sc || !out) return invalid("gob_verify_json: null argument");
  return guarded([&] {
    const auto t0 = std::chrono::steady_clock::now();
    const Instance& in = instance(sc);
    std::vector<std::string> names;
    if (!suite || std::strcmp(suite, "all") == 0) {
      names = suite_names();
      names.push_back("expect");
    } else {
      names.push_back(suite);
      if (names[0] != "expect" && std::find(suite_names().begin(), suite_names().end(), names[0]) == suite_names().end()) {
        throw Error(ErrorKind::Input, "unknown suite '" + names[0] + "'");
      }
    }
    const Computed& c = computed(sc);
    std::vector<SuiteVerdict> verdicts;
    bool pass = true;
    for (const auto& n : names) {
      verdicts.push_back(run_suite(in, c, n));
      pass = pass && verdicts.back().pass;
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (all_pass) *all_pass = pass ? 1 : 0;
    *out = dup(build_report(in, c, std::move(verdicts), seconds).dump(2));
  });
}

gob_status gob_family_json(const char* name, const gob_scenario* base, const char* params_json, char** out) {
  if (!name || !base || !out) return invalid("gob_family_json: null argument");
  return guarded([&] {
    FamilyParams p;
    p.base = base->sc;
    if (params_json && *params_json) {
      const json j = json::parse(params_json);
      if (!j.is_object()) throw Error(ErrorKind::Input, "family parameters must be a JSON object");
      for (const auto& [key, value] : j.items()) {
        if (key == "tau2") {
          if (!value.is_array() || value.size() != 2) throw Error(ErrorKind::Input, "tau2 needs two polynomials");
          p.tau2[0] = value[0].get<std::string>();
          p.tau2[1] = value[1].get<std::string>();
        } else if (key == "g") {
          p.g = value.get<std::string>();
        } else if (key == "homologous") {
          p.homologous = value.get<std::size_t>();
        } else {
          throw Error(ErrorKind::Input, "unknown family parameter '" + key + "'");
        }
      }
    }
    json arr = json::array();
    for (const auto& s : family(name, p)) arr.push_back({{"name", s.name}, {"text", s.to_text()}});
    *out = dup(arr.dump(2));
  });
}

void gob_string_free(char* s) { delete[] s; }

}  // extern "C"
