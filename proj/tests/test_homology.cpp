#include <gtest/gtest.h>

#include "homology/checks.hpp"
#include "support.hpp"

using namespace gobelin;
using gobelin::testing::elem;
using gobelin::testing::pair;
using gobelin::testing::quotient;

namespace {

BMatrix row(const AlgebraPtr& b, const Vector& f1, const Vector& f2) {
  BMatrix m(b, 1, 2);
  m.set(0, 0, f1);
  m.set(0, 1, f2);
  return m;
}

BMatrix col(const AlgebraPtr& b, const Vector& g1, const Vector& g2) {
  BMatrix m(b, 2, 1);
  m.set(0, 0, g1);
  m.set(1, 0, g2);
  return m;
}

ScalarComplex koszul_complex(const AlgebraPtr& b, const Vector& f1, const Vector& f2) {
  return ScalarComplex::from_bmatrices(Direction::Chain, {1, 2, 1}, {row(b, f1, f2), col(b, b->neg(f2), f1)});
}

}  // namespace

TEST(Expand, Examples) {
  auto q = quotient({"x"}, {"x^4"});
  auto b = q.algebra();
  BMatrix one(b, 1, 1);
  one.set(0, 0, b->unit());
  EXPECT_EQ(expand(one), Matrix::identity(b->field(), 4));

  BMatrix zero(b, 1, 1);
  EXPECT_TRUE(expand(zero).is_zero());

  BMatrix x(b, 1, 1);
  x.set(0, 0, elem(q, "x"));
  Matrix shift(b->field(), 4, 4);
  shift(1, 0) = 1;
  shift(2, 1) = 1;
  shift(3, 2) = 1;
  EXPECT_EQ(expand(x), shift);
}

TEST(Expand, BlockLayout) {
  auto q = quotient({"x"}, {"x^4"});
  auto b = q.algebra();
  BMatrix m(b, 2, 2);
  m.set(1, 0, elem(q, "x"));
  const Matrix e = expand(m);
  EXPECT_EQ(e.rows(), 8u);
  EXPECT_EQ(e(5, 0), 1);
  EXPECT_EQ(e(1, 4), 0);
}

TEST(Expand, MixedAlgebrasRejected) {
  auto q1 = quotient({"x"}, {"x^4"});
  auto q2 = quotient({"x"}, {"x^4"});
  BMatrix a(q1.algebra(), 1, 1);
  BMatrix c(q2.algebra(), 1, 1);
  EXPECT_THROW(a * c, Error);
}

TEST(HomologyAt, Examples) {
  auto q = quotient({"x"}, {"x^4"});
  auto b = q.algebra();
  ScalarComplex single(Direction::Chain, {4}, {});
  EXPECT_EQ(single.homology_at(0).dim(), 4u);

  auto k0 = koszul_complex(b, b->zero(), b->zero());
  EXPECT_EQ(k0.homology_at(0).dim(), 4u);
  EXPECT_EQ(k0.homology_at(1).dim(), 8u);
  EXPECT_EQ(k0.homology_at(2).dim(), 4u);

  auto k = koszul_complex(b, elem(q, "x^2"), elem(q, "x^3"));
  EXPECT_EQ(k.homology_at(0).dim(), 2u);
  EXPECT_EQ(k.homology_at(1).dim(), 4u);
  EXPECT_EQ(k.homology_at(2).dim(), 2u);
}

TEST(HomologyAt, BrokenComplex) {
  auto q = quotient({"x"}, {"x^4"});
  auto b = q.algebra();
  // (x, x) then (x, x)^t composes to 2x^2.
  auto c = ScalarComplex::from_bmatrices(Direction::Chain, {1, 2, 1},
                                         {row(b, elem(q, "x"), elem(q, "x")), col(b, elem(q, "x"), elem(q, "x"))});
  EXPECT_EQ(c.first_broken(), 0);
  EXPECT_THROW(c.check(), Error);
  EXPECT_THROW(c.homology_at(1), Error);
}

TEST(ClassCoords, Examples) {
  auto q = quotient({"x"}, {"x^4"});
  auto b = q.algebra();
  auto h1 = koszul_complex(b, elem(q, "x^2"), elem(q, "x^3")).homology_at(1);
  EXPECT_TRUE(is_zero(h1.class_coords(pair(q, "-x^3", "x^2"))));
  for (std::size_t i = 0; i < h1.boundaries().dim(); ++i) {
    EXPECT_TRUE(is_zero(h1.class_coords(h1.boundaries().vector(i))));
  }
  const auto basis = h1.coset_basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Vector unit(basis.size());
    unit[i] = 1;
    EXPECT_EQ(h1.class_coords(basis[i]), unit);
    EXPECT_EQ(h1.representative(unit), basis[i]);
  }
  try {
    h1.class_coords(pair(q, "1", "0"));
    FAIL() << "expected NotACycle";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotACycle);
  }
}

TEST(ClassCoords, ReductionIdempotent) {
  auto q = quotient({"x", "y"}, {"x^2", "y^2"});
  auto b = q.algebra();
  auto h1 = koszul_complex(b, elem(q, "x"), elem(q, "y")).homology_at(1);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 30; ++t) {
    Vector v(h1.ambient_dim());
    for (std::size_t i = 0; i < h1.cycles().dim(); ++i) {
      v = add(b->field(), v, scale(b->field(), b->field().from_int(static_cast<int>(rng() % 5) - 2), h1.cycles().vector(i)));
    }
    const Vector c = h1.class_coords(v);
    EXPECT_EQ(h1.class_coords(h1.representative(c)), c);
    EXPECT_TRUE(h1.is_boundary(sub(b->field(), v, h1.representative(c))));
  }
}

TEST(InducedMap, IdentityAndZero) {
  auto q = quotient({"x"}, {"x^4"});
  auto b = q.algebra();
  auto h1 = koszul_complex(b, elem(q, "x^2"), elem(q, "x^3")).homology_at(1);
  EXPECT_EQ(induced_map(h1, h1, Matrix::identity(b->field(), 8)), Matrix::identity(b->field(), 4));
  EXPECT_TRUE(induced_map(h1, h1, Matrix(b->field(), 8, 8)).is_zero());
}

TEST(InducedMap, Incompatible) {
  auto q = quotient({"x"}, {"x^4"});
  auto b = q.algebra();
  auto h1 = koszul_complex(b, elem(q, "x^2"), elem(q, "x^3")).homology_at(1);
  // Swapping the two components does not preserve the cycles.
  Matrix swap(b->field(), 8, 8);
  for (std::size_t i = 0; i < 4; ++i) {
    swap(i, i + 4) = 1;
    swap(i + 4, i) = 1;
  }
  try {
    induced_map(h1, h1, swap);
    FAIL() << "expected NotChainCompatible";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotChainCompatible);
  }
}

TEST(InducedMap, CompositionIsFunctorial) {
  auto q = quotient({"x", "y"}, {"x^2", "y^2"});
  auto b = q.algebra();
  auto h1 = koszul_complex(b, elem(q, "x"), elem(q, "y")).homology_at(1);
  const Matrix f = block_operator(*b, elem(q, "1 + x"), 2);
  const Matrix g = block_operator(*b, elem(q, "2 - y"), 2);
  EXPECT_EQ(induced_map(h1, h1, g * f), induced_map(h1, h1, g) * induced_map(h1, h1, f));
}

TEST(SubquotientTest, RejectsNonNested) {
  const FieldSpec f = FieldSpec::rationals();
  auto z = Subspace::span(f, 2, std::vector<Vector>{Vector{1, 0}});
  auto w = Subspace::span(f, 2, std::vector<Vector>{Vector{0, 1}});
  try {
    Subquotient s(z, w);
    FAIL() << "expected ComplexBroken";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ComplexBroken);
  }
}

TEST(Euler, RandomKoszulAndDual) {
  std::mt19937_64 rng(11);
  const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> rings = {
      {{"x"}, {"x^5"}}, {{"x", "y"}, {"x^2", "y^3"}}, {{"x", "y"}, {"x^2 - y^2", "x*y"}}};
  for (const auto& [vars, rels] : rings) {
    auto q = quotient(vars, rels);
    auto b = q.algebra();
    for (int t = 0; t < 10; ++t) {
      Vector f1 = gobelin::testing::random_element(*b, rng);
      Vector f2 = gobelin::testing::random_element(*b, rng);
      auto k = koszul_complex(b, f1, f2);
      k.check();
      auto [terms, hom] = k.euler_characteristics();
      EXPECT_EQ(terms, hom);
      EXPECT_EQ(terms, 0);
      std::vector<Matrix> dual = {k.maps()[0].transpose(), k.maps()[1].transpose()};
      ScalarComplex kd(Direction::Cochain, {b->mu(), 2 * b->mu(), b->mu()}, dual);
      kd.check();
      auto [dt, dh] = kd.euler_characteristics();
      EXPECT_EQ(dt, dh);
    }
  }
}

TEST(Checks, ShortExactOnKnownSequence) {
  const FieldSpec f = FieldSpec::rationals();
  // 0 -> K -> K^2 -> K -> 0 with inclusion into the first coordinate.
  Subquotient a(Subspace::full(f, 1), Subspace(f, 1));
  Subquotient bq(Subspace::full(f, 2), Subspace(f, 2));
  Subquotient c(Subspace::full(f, 1), Subspace(f, 1));
  Matrix inc(f, 2, 1);
  inc(0, 0) = 1;
  Matrix proj(f, 1, 2);
  proj(0, 1) = 1;
  std::vector<Check> out;
  check_short_exact(out, "toy", a, bq, c, inc, proj);
  EXPECT_EQ(out.size(), 3u);
  EXPECT_TRUE(all_pass(out));
  out.clear();
  check_short_exact(out, "bad", a, bq, c, inc, Matrix(f, 1, 2));
  EXPECT_FALSE(all_pass(out));
}
