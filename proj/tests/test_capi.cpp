// Exercises the shared library through its C header only.
#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "gobelin/gobelin.h"
#include "json.hpp"

namespace {

const char* kS1 =
    "field Q\nring x\nrelations x^4\nf1 = x^2\nf2 = x^3\nc11 = x^2\nc12 = 0\nc21 = x\nc22 = -1\nmax_degree 4\n";

gob_scenario* parse(const std::string& text) {
  gob_scenario* sc = nullptr;
  EXPECT_EQ(gob_scenario_parse(text.c_str(), "t", &sc), GOB_OK) << gob_last_error();
  return sc;
}

std::string take(char* s) {
  std::string out = s;
  gob_string_free(s);
  return out;
}

}  // namespace

TEST(CApi, CheckS1) {
  gob_scenario* sc = parse(kS1);
  gob_diagnostics d{};
  ASSERT_EQ(gob_check(sc, &d), GOB_OK);
  EXPECT_EQ(d.mu, 4u);
  EXPECT_EQ(d.nu, 2u);
  EXPECT_STREQ(gob_last_error(), "");
  gob_scenario_free(sc);
}

TEST(CApi, ParseErrorPosition) {
  gob_scenario* sc = nullptr;
  EXPECT_EQ(gob_scenario_parse("field Q\nring x\nrelations x^4 +* 1\n", "bad", &sc), GOB_ERR_INPUT);
  EXPECT_EQ(sc, nullptr);
  EXPECT_EQ(gob_last_error_line(), 3u);
  EXPECT_GT(gob_last_error_column(), 0u);
  EXPECT_STRNE(gob_last_error(), "");
}

TEST(CApi, HypothesisStatuses) {
  gob_scenario* sc = parse("field Q\nring x\nrelations x^4\nf1 = x^2\nf2 = x^3\nc11 = x\nc12 = 0\nc21 = 0\nc22 = 0\n");
  EXPECT_EQ(gob_check(sc, nullptr), GOB_ERR_SYZYGY_VIOLATION);
  EXPECT_NE(std::string(gob_last_error()).find("c11*f1 + c12*f2"), std::string::npos);
  gob_scenario_free(sc);
  sc = parse("field Q\nring x, y\nrelations x^2; x*y; y^2\nf1 = x\nf2 = y\nc11 = 0\nc12 = 0\nc21 = 0\nc22 = 0\n");
  EXPECT_EQ(gob_check(sc, nullptr), GOB_ERR_NOT_GORENSTEIN);
  gob_scenario_free(sc);
}

TEST(CApi, NullArguments) {
  EXPECT_EQ(gob_check(nullptr, nullptr), GOB_ERR_INPUT);
  EXPECT_EQ(gob_scenario_load(nullptr, nullptr), GOB_ERR_INPUT);
  gob_scenario* sc = nullptr;
  EXPECT_EQ(gob_scenario_load("/nonexistent/file.scn", &sc), GOB_ERR_INPUT);
  gob_scenario_free(nullptr);
}

TEST(CApi, HyperDims) {
  gob_scenario* sc = parse(kS1);
  size_t count = 0;
  ASSERT_EQ(gob_hyper_dims(sc, GOB_G2, 0, nullptr, 0, &count), GOB_OK);
  ASSERT_EQ(count, 5u);
  std::vector<size_t> d(count), dual(count);
  ASSERT_EQ(gob_hyper_dims(sc, GOB_G2, 0, d.data(), d.size(), &count), GOB_OK);
  EXPECT_EQ(d, (std::vector<size_t>{2, 0, 0, 0, 0}));
  ASSERT_EQ(gob_hyper_dims(sc, GOB_G1, 0, d.data(), d.size(), &count), GOB_OK);
  ASSERT_EQ(gob_hyper_dims(sc, GOB_G1, 1, dual.data(), dual.size(), &count), GOB_OK);
  EXPECT_EQ(d, dual);
  ASSERT_EQ(gob_scenario_set_max_degree(sc, 1), GOB_OK);
  ASSERT_EQ(gob_hyper_dims(sc, GOB_G2, 0, d.data(), d.size(), &count), GOB_OK);
  EXPECT_EQ(count, 2u);
  EXPECT_EQ(gob_hyper_dims(sc, static_cast<gob_complex>(7), 0, d.data(), d.size(), &count), GOB_ERR_INPUT);
  gob_scenario_free(sc);
}

TEST(CApi, FlagsAndVerify) {
  gob_scenario* sc = parse(kS1);
  char* raw = nullptr;
  ASSERT_EQ(gob_flags_json(sc, &raw), GOB_OK);
  const auto flags = nlohmann::json::parse(take(raw));
  EXPECT_EQ(flags["L"], nlohmann::json({0, 2}));
  EXPECT_EQ(flags["stab"]["L"], 1);
  EXPECT_EQ(flags["basis"]["L"][1], nlohmann::json({"x^2", "x^3"}));

  int pass = 0;
  ASSERT_EQ(gob_verify_json(sc, "all", &pass, &raw), GOB_OK);
  EXPECT_EQ(pass, 1);
  const auto report = nlohmann::json::parse(take(raw));
  EXPECT_EQ(report["suites"].size(), 8u);
  EXPECT_EQ(report["version"], gob_version());
  EXPECT_EQ(gob_verify_json(sc, "bogus", &pass, &raw), GOB_ERR_INPUT);
  gob_scenario_free(sc);
}

TEST(CApi, Family) {
  gob_scenario* base = parse(kS1);
  char* raw = nullptr;
  ASSERT_EQ(gob_family_json("one_zero", base, R"({"tau2": ["x^3", "0"]})", &raw), GOB_OK);
  const auto out = nlohmann::json::parse(take(raw));
  ASSERT_EQ(out.size(), 1u);
  const std::string text = out[0]["text"];
  EXPECT_NE(text.find("#@ expect_g2 2,3,4,5,6"), std::string::npos) << text;
  EXPECT_EQ(gob_family_json("one_zero", base, R"({"colour": 1})", &raw), GOB_ERR_INPUT);
  EXPECT_EQ(gob_family_json("one_zero", base, "{not json", &raw), GOB_ERR_INPUT);
  gob_scenario_free(base);
}
