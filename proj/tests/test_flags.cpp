#include <gtest/gtest.h>

#include "flags/flags.hpp"
#include "support.hpp"

using namespace gobelin;
using namespace gobelin::testing;

namespace {

struct Built {
  QuotientRing q;
  SyzygyPair s;
  KoszulData k;
  FlagReport fr;
};

Built make(std::vector<std::string> vars, std::vector<std::string> rels, std::vector<std::string> d,
           FieldSpec field = FieldSpec::rationals()) {
  auto q = quotient(vars, rels, field);
  auto s = syzygies(q, d[0], d[1], d[2], d[3], d[4], d[5]);
  auto k = koszul(q.algebra(), choose_trace(*q.algebra()), s.f1, s.f2);
  auto fr = compute_flags(s, k);
  return {q, s, k, fr};
}

}  // namespace

TEST(Flags, ZeroSyzygies) {
  auto b = make({"x"}, {"x^4"}, {"x^2", "x^3", "0", "0", "0", "0"});
  const Submodule all = full_module(*b.q.algebra(), 1);
  EXPECT_EQ(b.fr.L.at(1), all);
  EXPECT_EQ(b.fr.L.limit(), all);
  EXPECT_EQ(b.fr.F.limit(), all);
  EXPECT_EQ(b.fr.Lp.at(1), all);
  EXPECT_EQ(b.fr.Fp.limit(), all);
  EXPECT_EQ(b.fr.L.stab, 1u);
  EXPECT_EQ(b.fr.F.stab, 0u);
}

TEST(Flags, S1) {
  auto b = make({"x"}, {"x^4"}, {"x^2", "x^3", "x^2", "0", "x", "-1"});
  const FiniteAlgebra& a = *b.q.algebra();
  const Submodule x2 = ideal(a, {elem(b.q, "x^2")});
  EXPECT_EQ(b.fr.L.at(1), x2);
  EXPECT_EQ(b.fr.F.at(1), x2);
  EXPECT_EQ(b.fr.L.at(1).dim(), 2u);
  EXPECT_EQ(b.fr.L.stab, 1u);
  EXPECT_EQ(b.fr.F.stab, 1u);
  // Single nonzero gap on the F side, at j = 0.
  EXPECT_EQ(b.fr.F.dims(), (std::vector<std::size_t>{4, 2}));
  EXPECT_EQ(b.fr.F.at(1).dim() - b.fr.L.at(1).dim(), 0u);
  EXPECT_EQ(b.fr.Fp.at(1).dim() - b.fr.Lp.at(1).dim(), 0u);
}

TEST(Flags, MultipleOfOther) {
  // tau1 = x tau2 with tau2 = (x, -1).
  auto b = make({"x"}, {"x^4"}, {"x^2", "x^3", "x^2", "-x", "x", "-1"});
  const FiniteAlgebra& a = *b.q.algebra();
  EXPECT_EQ(b.fr.L.at(1), ideal(a, {elem(b.q, "x")}));
  EXPECT_EQ(b.fr.L.at(1).dim(), 3u);
  // L_j = (L_1 : x^{j-1}) and F'_j = (x^j) + L'_1.
  for (std::size_t j = 1; j <= 4; ++j) {
    const Vector g = a.power(elem(b.q, "x"), j - 1);
    EXPECT_EQ(b.fr.L.at(j), colon(a, b.fr.L.at(1), g)) << j;
    const Vector gj = a.power(elem(b.q, "x"), j);
    EXPECT_EQ(b.fr.Fp.at(j), module_sum(ideal(a, {gj}), b.fr.Lp.at(1))) << j;
  }
  // The chains settle at j = 2: L_2 = B and F'_2 = (x^2) = L'_1.
  EXPECT_EQ(b.fr.L.stab, 2u);
  EXPECT_EQ(b.fr.Fp.stab, 2u);
}

TEST(Flags, NotStabilizedWithTooFewSteps) {
  auto q = quotient({"x"}, {"x^4"});
  auto s = syzygies(q, "x^2", "x^3", "x^2", "-x", "x", "-1");
  auto k = koszul(q.algebra(), choose_trace(*q.algebra()), s.f1, s.f2);
  try {
    compute_flags(s, k, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotStabilized);
  }
}

TEST(Flags, ExtremalityTrivialCases) {
  auto b = make({"x"}, {"x^4"}, {"x^2", "x^3", "0", "0", "0", "0"});
  auto c = fixed_point_extremality(b.s, b.k, b.fr, 5, 1);
  EXPECT_TRUE(all_pass(c)) << failures(c);
}

namespace {

struct Case {
  std::vector<std::string> vars, relations, data;
};

const std::vector<Case>& cases() {
  static const std::vector<Case> c = {
      {{"x"}, {"x^4"}, {"x^2", "x^3", "x^2", "0", "x", "-1"}},
      {{"x"}, {"x^4"}, {"x^2", "x^3", "x^2", "-x", "x", "-1"}},
      {{"x"}, {"x^4"}, {"x^2", "x^3", "0", "0", "x^3", "0"}},
      {{"x"}, {"x^6"}, {"x^3", "x^4", "x", "-1", "x^3", "0"}},
      {{"x"}, {"x^8"}, {"x^4", "x^5", "x^3", "-x^2", "x^4", "0"}},
      {{"x", "y"}, {"x^2", "y^2"}, {"x", "y", "y", "-x", "x*y", "0"}},
      {{"x", "y"}, {"x^3", "y^3"}, {"x^2", "y^2", "y^2", "-x^2", "x", "0"}},
      {{"x", "y"}, {"x^3", "y^3"}, {"x^2", "x*y", "y", "-x", "x*y^2", "0"}},
      {{"x", "y"}, {"x^2 - y^2", "x*y"}, {"x", "y", "y", "-x", "y", "0"}},
      {{"x", "y"}, {"x^2 + y^3", "x*y"}, {"x", "y^2", "y^2", "-x", "y", "0"}},
      {{"x", "y"}, {"x^4", "y^4"}, {"x^2", "y^2", "y^2", "-x^2", "x^3", "x*y^3"}},
      {{"x", "y", "z"}, {"x^2", "y^2", "z^2"}, {"x", "y", "y", "-x", "x*z", "y*z"}},
  };
  return c;
}

}  // namespace

class FlagCases : public ::testing::TestWithParam<std::size_t> {};

TEST_P(FlagCases, Properties) {
  const Case& c = cases()[GetParam()];
  for (FieldSpec field : {FieldSpec::rationals(), FieldSpec::prime(32749)}) {
    auto b = make(c.vars, c.relations, c.data, field);
    check_syzygies(b.s);
    for (const auto& checks : {flag_structure(b.s, b.k, b.fr), fixed_point_extremality(b.s, b.k, b.fr, 10, 3),
                               flag_gap_monotonicity(b.fr), phi_psi_dims(b.fr)}) {
      EXPECT_TRUE(all_pass(checks)) << failures(checks);
    }
    const std::size_t J = 7;
    auto g1 = build_g1(b.s, J);
    auto g2 = build_g2(b.s, J);
    auto cd = cdos_check(b.s, b.k, b.fr, g1, g2);
    EXPECT_TRUE(all_pass(cd.checks)) << failures(cd.checks) << failures(cd.details);
    auto di = dual_image_check(b.s, b.k, b.fr, dual_of(g1), dual_of(g2));
    EXPECT_TRUE(all_pass(di.checks)) << failures(di.checks) << failures(di.details);
    std::printf("case %zu: L %zu F %zu L' %zu F' %zu | cdos %s | dual %s\n", GetParam(), b.fr.L.stab, b.fr.F.stab,
                b.fr.Lp.stab, b.fr.Fp.stab, cd.verdict().c_str(), di.verdict().c_str());
  }
}

INSTANTIATE_TEST_SUITE_P(Scenarios, FlagCases, ::testing::Range<std::size_t>(0, 12));
