// Command-line front end. Talks to the library only through the C API.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gobelin/gobelin.h"
#include "json.hpp"

using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kInputError = 2;

int exit_code(gob_status s) {
  if (s == GOB_OK) return kOk;
  return s == GOB_ERR_INPUT ? kInputError : kFailure;
}

int report(gob_status s) {
  std::cerr << "error: " << gob_status_name(s) << ": " << gob_last_error();
  if (gob_last_error_line() > 0) std::cerr << " (line " << gob_last_error_line() << ", column " << gob_last_error_column() << ")";
  std::cerr << "\n";
  return exit_code(s);
}

struct ScenarioDeleter {
  void operator()(gob_scenario* p) const { gob_scenario_free(p); }
};
using ScenarioPtr = std::unique_ptr<gob_scenario, ScenarioDeleter>;

// Owns a string returned by the library.
std::string take(char* s) {
  std::string out = s ? s : "";
  gob_string_free(s);
  return out;
}

gob_status load(const std::string& path, long max_degree, ScenarioPtr& out) {
  gob_scenario* raw = nullptr;
  gob_status s = gob_scenario_load(path.c_str(), &raw);
  if (s != GOB_OK) return s;
  out.reset(raw);
  if (max_degree >= 0) s = gob_scenario_set_max_degree(raw, static_cast<size_t>(max_degree));
  return s;
}

int write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return kOk;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot write " << path << "\n";
    return kInputError;
  }
  f << text;
  return kOk;
}

int cmd_check(const std::string& path) {
  ScenarioPtr sc;
  gob_status s = load(path, -1, sc);
  if (s != GOB_OK) return report(s);
  gob_diagnostics d{};
  s = gob_check(sc.get(), &d);
  if (s != GOB_OK) return report(s);
  std::cout << "ok: local Gorenstein, both syzygies vanish\n"
            << "mu=" << d.mu << " nu=" << d.nu << " nu1=" << d.nu1 << " nu2=" << d.nu2 << " tau1_dim=" << d.tau1_dim
            << " tau2_dim=" << d.tau2_dim << "\n";
  return kOk;
}

int cmd_hyper(const std::string& path, const std::string& which, bool dual, long max_degree, const std::string& format) {
  ScenarioPtr sc;
  gob_status s = load(path, max_degree, sc);
  if (s != GOB_OK) return report(s);
  size_t count = 0;
  const gob_complex c = which == "g1" ? GOB_G1 : GOB_G2;
  s = gob_hyper_dims(sc.get(), c, dual, nullptr, 0, &count);
  if (s != GOB_OK) return report(s);
  std::vector<size_t> dims(count);
  s = gob_hyper_dims(sc.get(), c, dual, dims.data(), dims.size(), &count);
  if (s != GOB_OK) return report(s);
  if (format == "json") {
    json j = {{"complex", which}, {"dual", dual}, {"max_degree", count - 1}, {"dims", dims}};
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  const std::string name = which == "g1" ? "G1" : "G2";
  for (size_t j = 0; j < dims.size(); ++j) {
    std::cout << (dual ? "H^" : "H_") << j << "(" << name << (dual ? "*" : "") << ") = " << dims[j] << "\n";
  }
  return kOk;
}

std::string join(const json& arr) {
  std::string out;
  for (size_t i = 0; i < arr.size(); ++i) out += (i ? "," : "") + arr[i].dump();
  return out;
}

int cmd_flags(const std::string& path, const std::string& format) {
  ScenarioPtr sc;
  gob_status s = load(path, -1, sc);
  if (s != GOB_OK) return report(s);
  char* raw = nullptr;
  s = gob_flags_json(sc.get(), &raw);
  if (s != GOB_OK) return report(s);
  const std::string text = take(raw);
  if (format == "json") {
    std::cout << text << "\n";
    return kOk;
  }
  const json j = json::parse(text);
  for (const char* f : {"L", "F", "Lp", "Fp"}) {
    std::cout << f << ": dims " << join(j[f]) << ", stabilizes at " << j["stab"][f].get<size_t>() << "\n";
    const json& terms = j["basis"][f];
    for (size_t i = 0; i < terms.size(); ++i) {
      std::cout << "  " << f << "_" << i << " = <";
      for (size_t k = 0; k < terms[i].size(); ++k) std::cout << (k ? ", " : "") << terms[i][k].get<std::string>();
      std::cout << ">\n";
    }
  }
  return kOk;
}

int cmd_verify(const std::string& path, const std::string& suite, long max_degree, const std::string& format,
               const std::string& out) {
  ScenarioPtr sc;
  gob_status s = load(path, max_degree, sc);
  if (s != GOB_OK) return report(s);
  char* raw = nullptr;
  int pass = 0;
  s = gob_verify_json(sc.get(), suite.c_str(), &pass, &raw);
  if (s != GOB_OK) return report(s);
  const std::string text = take(raw);
  if (format == "json") {
    const int rc = write_output(text + "\n", out);
    if (rc != kOk) return rc;
  }
  const json j = json::parse(text);
  std::ostream& os = format == "json" && out.empty() ? std::cerr : std::cout;
  bool first_failure = true;
  for (const auto& v : j["suites"]) {
    if (format != "json") {
      os << v["name"].get<std::string>() << ": " << (v["pass"].get<bool>() ? "PASS" : "FAIL") << " (" << v["checks"].size()
         << " checks)";
      for (const auto& [k, note] : v["notes"].items()) {
        if (k.find("variant") != std::string::npos) os << " " << k << "=" << note.get<std::string>();
      }
      os << "\n";
    }
    for (const auto& c : v["checks"]) {
      if (c["pass"].get<bool>() || !first_failure) continue;
      first_failure = false;
      os << "first failing check [" << v["name"].get<std::string>() << "] " << c["name"].get<std::string>()
         << ": expected " << c["expected"].get<std::string>() << ", got " << c["actual"].get<std::string>() << "\n";
    }
  }
  if (format != "json" && !out.empty()) {
    const int rc = write_output(text + "\n", out);
    if (rc != kOk) return rc;
  }
  return pass ? kOk : kFailure;
}

int cmd_family(const std::string& name, const std::string& base_path, const std::vector<std::string>& params,
               const std::string& out_dir) {
  ScenarioPtr base;
  gob_status s = load(base_path, -1, base);
  if (s != GOB_OK) return report(s);
  json p = json::object();
  for (const auto& kv : params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      std::cerr << "error: parameter '" << kv << "' is not key=value\n";
      return kInputError;
    }
    const std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
    if (key == "tau2") {
      const auto comma = value.find(',');
      if (comma == std::string::npos) {
        std::cerr << "error: tau2 needs two polynomials separated by a comma\n";
        return kInputError;
      }
      p["tau2"] = {value.substr(0, comma), value.substr(comma + 1)};
    } else if (key == "homologous") {
      try {
        p["homologous"] = std::stoul(value);
      } catch (const std::exception&) {
        std::cerr << "error: homologous must be a count\n";
        return kInputError;
      }
    } else {
      p[key] = value;
    }
  }
  char* raw = nullptr;
  s = gob_family_json(name.c_str(), base.get(), p.dump().c_str(), &raw);
  if (s != GOB_OK) return report(s);
  const json generated = json::parse(take(raw));
  if (out_dir.empty()) {
    for (const auto& g : generated) std::cout << "# " << g["name"].get<std::string>() << "\n" << g["text"].get<std::string>() << "\n";
    return kOk;
  }
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    std::cerr << "error: cannot create " << out_dir << ": " << ec.message() << "\n";
    return kInputError;
  }
  for (const auto& g : generated) {
    const std::string file = (std::filesystem::path(out_dir) / (g["name"].get<std::string>() + ".scn")).string();
    const int rc = write_output(g["text"].get<std::string>(), file);
    if (rc != kOk) return rc;
    std::cout << file << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyperhomology of small Gobelin complexes over a zero-dimensional Gorenstein algebra"};
  app.set_version_flag("--version", std::string(gob_version()));
  app.require_subcommand(1);

  std::string path, which = "g2", format = "text", suite = "all", out, family, base;
  bool dual = false;
  long max_degree = -1;
  std::vector<std::string> params;

  auto* check = app.add_subcommand("check", "Validate a scenario and print its invariants");
  check->add_option("scenario", path, "Scenario file")->required();

  auto* hyper = app.add_subcommand("hyper", "Dimensions of the hyperhomology");
  hyper->add_option("scenario", path, "Scenario file")->required();
  hyper->add_option("--complex", which, "g1 or g2")->check(CLI::IsMember({"g1", "g2"}));
  hyper->add_flag("--dual", dual, "Hypercohomology of the dual complex");
  hyper->add_option("--max-degree", max_degree, "Top degree J")->check(CLI::Range(0, 64));
  hyper->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* flags = app.add_subcommand("flags", "Print the flags L, F, L', F'");
  flags->add_option("scenario", path, "Scenario file")->required();
  flags->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("scenario", path, "Scenario file")->required();
  verify->add_option("--suite", suite, "algebra, koszul, g1, les, cdos, flags, dual, expect or all");
  verify->add_option("--max-degree", max_degree, "Top degree J")->check(CLI::Range(0, 64));
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", out, "Write the JSON report here");

  auto* fam = app.add_subcommand("family", "Generate scenarios of an example family");
  fam->add_option("name", family, "zero_syzygies, one_zero or g_multiple")->required();
  fam->add_option("params", params, "key=value: tau2=a,b  g=poly  homologous=n");
  fam->add_option("--base", base, "Scenario supplying ring, f1, f2, max_degree and seed")->required();
  fam->add_option("--out", out, "Directory for the generated files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  if (*check) return cmd_check(path);
  if (*hyper) return cmd_hyper(path, which, dual, max_degree, format);
  if (*flags) return cmd_flags(path, format);
  if (*verify) return cmd_verify(path, suite, max_degree, format, out);
  return cmd_family(family, base, params, out);
}
