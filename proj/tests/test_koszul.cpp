#include <gtest/gtest.h>

#include "support.hpp"

using namespace gobelin;
using namespace gobelin::testing;

namespace {

struct Ring {
  std::vector<std::string> vars;
  std::vector<std::string> relations;
};

const std::vector<Ring>& rings() {
  static const std::vector<Ring> r = {{{"x"}, {"x^4"}},
                                      {{"x"}, {"x^6"}},
                                      {{"x", "y"}, {"x^2", "y^2"}},
                                      {{"x", "y"}, {"x^3", "y^3"}},
                                      {{"x", "y"}, {"x^2 - y^2", "x*y"}},
                                      {{"x", "y"}, {"x^2 + y^3", "x*y"}},
                                      {{"x", "y", "z"}, {"x^2", "y^2", "z^2"}}};
  return r;
}

Vector random_nonunit(const FiniteAlgebra& b, std::mt19937_64& rng) {
  for (;;) {
    Vector v = random_element(b, rng);
    v[0] = 0;  // the unit is the first standard monomial
    if (!b.is_invertible(v)) return v;
  }
}

}  // namespace

TEST(Syzygies, CheckNamesRow) {
  auto q = quotient({"x"}, {"x^4"});
  check_syzygies(syzygies(q, "x^2", "x^3", "x", "-1", "x^2", "0"));
  try {
    check_syzygies(syzygies(q, "x^2", "x^3", "x", "-1", "1", "0"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SyzygyViolation);
    EXPECT_NE(std::string(e.what()).find("c21"), std::string::npos);
  }
}

TEST(Koszul, Examples) {
  auto q = quotient({"x"}, {"x^4"});
  auto k = koszul_of(q, "x^2", "x^3");
  EXPECT_EQ(k.nu, 2u);
  EXPECT_EQ(k.h0.dim(), 2u);
  EXPECT_EQ(k.h1.dim(), 4u);
  EXPECT_EQ(k.h2.dim(), 2u);

  auto q2 = quotient({"x", "y"}, {"x^2", "y^2"});
  auto k2 = koszul_of(q2, "x", "y");
  EXPECT_EQ(k2.nu, 1u);
  EXPECT_EQ(k2.h0.dim(), 1u);
  EXPECT_EQ(k2.h1.dim(), 2u);
  EXPECT_EQ(k2.h2.dim(), 1u);

  auto k0 = koszul_of(q2, "0", "0");
  EXPECT_EQ(k0.h0.dim(), 4u);
  EXPECT_EQ(k0.h1.dim(), 8u);
  EXPECT_EQ(k0.h2.dim(), 4u);
}

TEST(Koszul, UnitRejected) {
  auto q = quotient({"x"}, {"x^4"});
  try {
    koszul_of(q, "1 + x", "x^3");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnitElement);
  }
  EXPECT_THROW(koszul_of(q, "x", "2"), Error);
}

TEST(H1Action, Examples) {
  auto q = quotient({"x"}, {"x^4"});
  auto k = koszul_of(q, "x^2", "x^3");
  const Vector cls = k.h1.class_coords(pair(q, "x", "-1"));
  EXPECT_FALSE(is_zero(cls));
  EXPECT_EQ(h1_action(k, elem(q, "1"), cls), cls);
  EXPECT_TRUE(is_zero(h1_action(k, elem(q, "x^2"), cls)));
  EXPECT_TRUE(is_zero(h1_action(k, elem(q, "x^3"), cls)));
  EXPECT_FALSE(is_zero(h1_action(k, elem(q, "x"), cls)));
  EXPECT_EQ(class_module_dim(k, pair(q, "x", "-1")), 2u);
}

TEST(ColonInH1, Examples) {
  auto q = quotient({"x"}, {"x^4"});
  const FiniteAlgebra& b = *q.algebra();
  auto k = koszul_of(q, "x^2", "x^3");
  const Vector tau = pair(q, "x^2", "0");
  const Vector bd = pair(q, "-x^3", "x^2");
  EXPECT_EQ(colon_in_h1(k, zero_module(b, 1), tau, bd), full_module(b, 1));
  EXPECT_EQ(colon_in_h1(k, zero_module(b, 1), tau, tau), ideal(b, {elem(q, "x^2")}));
  EXPECT_EQ(colon_in_h1(k, zero_module(b, 1), tau, tau).dim(), 2u);
  const Vector t2 = pair(q, "x", "-1");
  const Vector t1 = module_scale(b, elem(q, "x"), t2);
  EXPECT_EQ(colon_in_h1(k, full_module(b, 1), t2, t1), full_module(b, 1));
  try {
    colon_in_h1(k, zero_module(b, 1), tau, pair(q, "1", "0"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotACycle);
  }
}

TEST(KappaIso, Examples) {
  auto q = quotient({"x"}, {"x^4"});
  auto k = koszul_of(q, "x^2", "x^3");
  const Matrix ki = kappa_iso(k);
  EXPECT_EQ(ki.rows(), 4u);
  EXPECT_EQ(ki.cols(), 4u);
  EXPECT_EQ(rank(ki), 4u);
  EXPECT_EQ(ki.transpose() * k.gram_co1 * ki, k.gram_h1);
}

TEST(KoszulSequences, Examples) {
  auto q = quotient({"x"}, {"x^4"});
  auto k = koszul_of(q, "x^2", "x^3");
  auto c = koszul_sequences_check(k);
  EXPECT_TRUE(all_pass(c)) << failures(c);

  auto q2 = quotient({"x", "y"}, {"x^2", "y^2"});
  auto c2 = koszul_sequences_check(koszul_of(q2, "x", "y"));
  EXPECT_TRUE(all_pass(c2)) << failures(c2);

  auto k0 = koszul_of(q2, "0", "0");
  auto c0 = koszul_sequences_check(k0);
  EXPECT_TRUE(all_pass(c0)) << failures(c0);
  EXPECT_EQ(k0.h1.dim(), 8u);
}

class KoszulProperties : public ::testing::TestWithParam<std::size_t> {};

TEST_P(KoszulProperties, RandomPairs) {
  const Ring& r = rings()[GetParam()];
  for (FieldSpec field : {FieldSpec::rationals(), FieldSpec::prime(32749)}) {
    auto q = quotient(r.vars, r.relations, field);
    const FiniteAlgebra& b = *q.algebra();
    std::mt19937_64 rng(100 + GetParam());
    for (int t = 0; t < 8; ++t) {
      const Vector f1 = random_nonunit(b, rng);
      const Vector f2 = random_nonunit(b, rng);
      auto k = koszul(q.algebra(), choose_trace(b), f1, f2);
      for (const auto& checks : {koszul_invariants(k), dimension_table(k), koszul_sequences_check(k)}) {
        EXPECT_TRUE(all_pass(checks)) << b.format(f1) << ", " << b.format(f2) << "\n" << failures(checks);
      }
      // colon_in_h1 always returns an ideal.
      const Vector tau = join(std::vector<Vector>{b.neg(f2), f1});
      const Submodule start = ideal(b, {random_element(b, rng)});
      EXPECT_TRUE(is_submodule(b, 1, colon_in_h1(k, start, tau, k.h1.cycles().vector(0)).space));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Rings, KoszulProperties, ::testing::Range<std::size_t>(0, 7));

TEST(Koszul, DualTraceGivesSameRanks) {
  auto q = quotient({"x", "y"}, {"x^2 - y^2", "x*y"});
  const FiniteAlgebra& b = *q.algebra();
  const TraceMap l2 = alternative_trace(b, choose_trace(b), 5);
  auto k = koszul(q.algebra(), l2, elem(q, "x"), elem(q, "x + y"));
  EXPECT_TRUE(all_pass(koszul_invariants(k))) << failures(koszul_invariants(k));
}
