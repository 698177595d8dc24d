#include <gtest/gtest.h>

#include "gobelin/gobelin.hpp"
#include "support.hpp"

using namespace gobelin;
using namespace gobelin::testing;

namespace {

// Writes a BMatrix as rows of entry strings for comparison with printed matrices.
std::vector<std::vector<std::string>> entries(const BMatrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r].push_back(m.algebra()->format(m.at(r, c)));
  }
  return out;
}

// Generic entries: a ring where f1, f2, c_ij are distinct nonzero monomials
// would need a syzygy; for layout tests the identities are irrelevant, so
// the blocks are compared by position against named elements instead.
struct Named {
  QuotientRing q = quotient({"x", "y"}, {"x^4", "y^4"});
  SyzygyPair s = make_syzygy_pair(q.algebra(), elem(q, "x"), elem(q, "y"), elem(q, "x^2"), elem(q, "y^2"),
                                   elem(q, "x^3"), elem(q, "y^3"));
};

std::size_t sum(const std::vector<std::size_t>& v) {
  std::size_t t = 0;
  for (auto x : v) t += x;
  return t;
}

}  // namespace

TEST(Blocks, GoldenSmallMatrices) {
  Named n;
  // f1 = x, f2 = y, c11 = x^2, c12 = y^2, c21 = x^3, c22 = y^3.
  using R = std::vector<std::vector<std::string>>;
  EXPECT_EQ(entries(phi(n.s, 1)), (R{{"x", "y"}}));
  EXPECT_EQ(entries(psi(n.s, 1)), (R{{"-y", "x^2", "x^3"}, {"x", "y^2", "y^3"}}));
  EXPECT_EQ(entries(phi(n.s, 2)), (R{{"-y^2", "-y^3", "x^2", "x^3"}, {"x", "0", "y", "0"}, {"0", "x", "0", "y"}}));
  EXPECT_EQ(entries(psi(n.s, 2)), (R{{"-y", "0", "x^2", "x^3", "0"},
                                     {"0", "-y", "0", "x^2", "x^3"},
                                     {"x", "0", "y^2", "y^3", "0"},
                                     {"0", "x", "0", "y^2", "y^3"}}));
  EXPECT_EQ(entries(c_psi(n.s)), (R{{"-y", "x^2"}, {"x", "y^2"}}));
  EXPECT_EQ(entries(c_phi(n.s)), (R{{"-y^2", "x^2"}, {"x", "y"}}));
}

TEST(BuildG1, Examples) {
  auto q = quotient({"x"}, {"x^4"});
  auto s = syzygies(q, "x^2", "x^3", "x", "-1", "0", "0");
  auto g = build_g1(s, 6);
  EXPECT_EQ(entries(g.differentials[0]), (std::vector<std::vector<std::string>>{{"x^2", "x^3"}}));
  // c12 = -1 is a unit, so both ends of the even-degree extension vanish:
  // Ann(f1,f2) is hit by (-c12, c11) Z and (0 : tau1) = (x^2) = (f1, f2).
  EXPECT_EQ(g.dims(), (std::vector<std::size_t>{2, 2, 0, 0, 0, 0, 0}));
  EXPECT_EQ(g.ranks.size(), 8u);

  auto s0 = syzygies(q, "x^2", "x^3", "0", "0", "0", "0");
  auto g0 = build_g1(s0, 4);
  for (std::size_t k = 1; k < g0.differentials.size(); ++k) {
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t c = 0; c < 2; ++c) {
        const Vector& e = g0.differentials[k].at(r, c);
        EXPECT_TRUE(is_zero(e) || e == elem(q, "x^2") || e == elem(q, "x^3") || e == elem(q, "-x^2") ||
                    e == elem(q, "-x^3"));
      }
    }
  }
  EXPECT_THROW(build_g1(syzygies(q, "x^2", "x^3", "1", "0", "0", "0"), 3), Error);
}

TEST(BuildG2, Examples) {
  auto q = quotient({"x"}, {"x^4"});
  auto s0 = syzygies(q, "x^2", "x^3", "0", "0", "0", "0");
  auto g0 = build_g2(s0, 6);
  for (std::size_t j = 0; j <= 6; ++j) EXPECT_EQ(g0.homology[j].dim(), 2 * (j + 1));

  auto s1 = syzygies(q, "x^2", "x^3", "x^2", "0", "x", "-1");
  auto g1 = build_g2(s1, 6);
  EXPECT_EQ(g1.homology[0].dim(), 2u);
  EXPECT_EQ(g1.homology[1].dim(), 0u);
  for (std::size_t k = 0; k <= 7; ++k) EXPECT_EQ(g1.ranks[k], k + 1);
  try {
    build_g2(syzygies(q, "x^2", "x^3", "x^2", "0", "1", "0"), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SyzygyViolation);
  }
}

TEST(BuildG2, GoldenDifferentialsInComplex) {
  auto q = quotient({"x"}, {"x^4"});
  auto s = syzygies(q, "x^2", "x^3", "x^2", "0", "x", "-1");
  auto g = build_g2(s, 4);
  using R = std::vector<std::vector<std::string>>;
  EXPECT_EQ(entries(g.differentials[1]), (R{{"-x^3", "x^2", "x"}, {"x^2", "0", "-1"}}));
  EXPECT_EQ(entries(g.differentials[2]), (R{{"0", "1", "x^2", "x"}, {"x^2", "0", "x^3", "0"}, {"0", "x^2", "0", "x^3"}}));
}

TEST(Les, S1ExactThroughSix) {
  auto q = quotient({"x"}, {"x^4"});
  auto s = syzygies(q, "x^2", "x^3", "x^2", "0", "x", "-1");
  auto rep = les_maps(s, 6);
  EXPECT_TRUE(all_pass(rep.checks)) << failures(rep.checks);
  EXPECT_EQ(rep.degrees.size(), 7u);
}

TEST(Les, BoundaryVanishesOnBoundaryClasses) {
  // A class whose b_1 lies in (f1, f2) and a_1 = 0 maps to zero.
  auto q = quotient({"x"}, {"x^4"});
  const FiniteAlgebra& b = *q.algebra();
  auto s = syzygies(q, "x^2", "x^3", "x^2", "0", "x", "-1");
  auto g1 = build_g1(s, 3);
  auto g2 = build_g2(s, 3);
  // H_0(G2) -> H_1(G1): b_1 = x^2 is a boundary of G2 in degree 0.
  const Vector v = elem(q, "x^2");
  ASSERT_TRUE(g2.homology[0].is_boundary(v));
  auto rep = les_maps(s, g1, g2);
  EXPECT_TRUE(is_zero(rep.boundary[1].apply(g2.homology[0].class_coords(v))));
  (void)b;
}

TEST(Les, SigmaAfterIotaVanishes) {
  auto q = quotient({"x", "y"}, {"x^2", "y^2"});
  const FiniteAlgebra& b = *q.algebra();
  for (std::size_t k = 0; k <= 6; ++k) EXPECT_TRUE((sigma_matrix(b, k) * iota_matrix(b, k)).is_zero());
}

TEST(G1ClosedForms, Examples) {
  auto q = quotient({"x"}, {"x^4"});
  auto s = syzygies(q, "x^2", "x^3", "x", "-1", "0", "0");
  auto k = koszul_of(q, "x^2", "x^3");
  auto g1 = build_g1(s, 5);
  auto checks = g1_closed_forms(s, k, g1, dual_of(g1));
  EXPECT_TRUE(all_pass(checks)) << failures(checks);
  EXPECT_EQ(g1.homology[1].dim(), 2u);
  EXPECT_EQ(g1.homology[0].dim(), k.nu);

  auto s0 = syzygies(q, "x^2", "x^3", "0", "0", "0", "0");
  auto g0 = build_g1(s0, 5);
  for (std::size_t j = 1; 2 * j <= 5; ++j) EXPECT_EQ(g0.homology[2 * j].dim(), 2 * k.nu);
}

namespace {

struct Case {
  std::vector<std::string> vars, relations;
  std::vector<std::string> data;  // f1 f2 c11 c12 c21 c22
};

const std::vector<Case>& cases() {
  static const std::vector<Case> c = {
      {{"x"}, {"x^4"}, {"x^2", "x^3", "x^2", "0", "x", "-1"}},
      {{"x"}, {"x^4"}, {"x^2", "x^3", "x", "-1", "x^2", "-x"}},
      {{"x"}, {"x^6"}, {"x^3", "x^4", "x", "-1", "x^3", "0"}},
      {{"x", "y"}, {"x^2", "y^2"}, {"x", "y", "y", "-x", "x*y", "0"}},
      {{"x", "y"}, {"x^3", "y^3"}, {"x^2", "y^2", "y^2", "-x^2", "x", "0"}},
      {{"x", "y"}, {"x^2 - y^2", "x*y"}, {"x", "y", "y", "-x", "y", "0"}},
      {{"x", "y"}, {"x^2 + y^3", "x*y"}, {"x", "y^2", "y^2", "-x", "y", "0"}},
      {{"x", "y", "z"}, {"x^2", "y^2", "z^2"}, {"x", "y", "y", "-x", "x*z", "y*z"}},
  };
  return c;
}

SyzygyPair case_pair(const QuotientRing& q, const Case& c) {
  return syzygies(q, c.data[0], c.data[1], c.data[2], c.data[3], c.data[4], c.data[5]);
}

}  // namespace

class GobelinCases : public ::testing::TestWithParam<std::size_t> {};

TEST_P(GobelinCases, InvariantsHold) {
  const Case& c = cases()[GetParam()];
  for (FieldSpec field : {FieldSpec::rationals(), FieldSpec::prime(32749)}) {
    auto q = quotient(c.vars, c.relations, field);
    auto s = case_pair(q, c);
    check_syzygies(s);
    const std::size_t J = 6;
    auto g1 = build_g1(s, J);
    auto g2 = build_g2(s, J);
    auto g1d = dual_of(g1);
    auto g2d = dual_of(g2);
    EXPECT_EQ(g1.complex.first_broken(), -1);
    EXPECT_EQ(g2d.complex.first_broken(), -1);
    EXPECT_EQ(g1d.dims(), g1.dims());
    EXPECT_EQ(g2d.dims(), g2.dims());
    auto k = koszul(q.algebra(), choose_trace(*q.algebra()), s.f1, s.f2);
    auto closed = g1_closed_forms(s, k, g1, g1d);
    EXPECT_TRUE(all_pass(closed)) << failures(closed);
    auto rep = les_maps(s, g1, g2);
    EXPECT_TRUE(all_pass(rep.checks)) << failures(rep.checks);
    // Same dims with the syzygies swapped for G1 built on tau2? Not claimed; only check constancy of G1.
    for (std::size_t j = 3; j <= J; ++j) EXPECT_EQ(g1.homology[j].dim(), g1.homology[2].dim());
    // Stable differences of G2 in each parity.
    const auto d = g2.dims();
    EXPECT_EQ(d[6] - d[4], d[4] - d[2]) << GetParam();
    EXPECT_EQ(d[5] - d[3], d[5 - 2] - d[1]) << GetParam();
    EXPECT_GT(sum(d), 0u);
  }
}

TEST_P(GobelinCases, HomologousSyzygiesSameDims) {
  const Case& c = cases()[GetParam()];
  auto q = quotient(c.vars, c.relations);
  const FiniteAlgebra& b = *q.algebra();
  auto s = case_pair(q, c);
  const auto base = build_g2(s, 5).dims();
  std::mt19937_64 rng(500 + GetParam());
  const Vector koszul_boundary = join(std::vector<Vector>{b.neg(s.f2), s.f1});
  for (int t = 0; t < 4; ++t) {
    SyzygyPair moved = s;
    moved.tau1 = add(b.field(), s.tau1, module_scale(b, random_element(b, rng), koszul_boundary));
    moved.tau2 = add(b.field(), s.tau2, module_scale(b, random_element(b, rng), koszul_boundary));
    EXPECT_EQ(build_g2(moved, 5).dims(), base);
  }
}

INSTANTIATE_TEST_SUITE_P(Scenarios, GobelinCases, ::testing::Range<std::size_t>(0, 8));
