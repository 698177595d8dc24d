#include <gtest/gtest.h>

#include "exactlin/linalg.hpp"
#include "support.hpp"

using namespace gobelin;
using gobelin::testing::random_int_matrix;
using gobelin::testing::random_low_rank;

namespace {

const FieldSpec Q = FieldSpec::rationals();

TEST(Field, RejectsCompositeAndHugeCharacteristic) {
  EXPECT_THROW(FieldSpec::prime(15), Error);
  EXPECT_THROW(FieldSpec::prime(2147483659ULL), Error);
  EXPECT_NO_THROW(FieldSpec::prime(32749));
}

TEST(Field, PrimeArithmetic) {
  const FieldSpec f = FieldSpec::prime(7);
  EXPECT_EQ(f.reduce(Scalar(-1)), 6);
  EXPECT_EQ(f.mul(3, 5), 1);
  EXPECT_EQ(f.inv(3), 5);
  EXPECT_EQ(f.from_fraction(1, 2), 4);
  EXPECT_THROW(f.from_fraction(1, 14), Error);
  EXPECT_EQ(f.sub(2, 5), 4);
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(Matrix(Q, 0, 0)), 0u);
  EXPECT_EQ(rank(Matrix::identity(Q, 3)), 3u);
  EXPECT_EQ(rank(Matrix::from_ints(Q, 2, 3, {1, 2, 3, 2, 4, 6})), 1u);
}

TEST(Rank, MixedFieldEntriesRejected) {
  const FieldSpec f = FieldSpec::prime(5);
  Matrix m(f, 1, 1);
  m(0, 0) = Scalar(1, 2);
  EXPECT_THROW(rank(m), Error);
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel_basis(Matrix::identity(Q, 2)).dim(), 0u);
  const Subspace full = kernel_basis(Matrix(Q, 2, 2));
  EXPECT_EQ(full, Subspace::full(Q, 2));
  const FieldSpec f2 = FieldSpec::prime(2);
  const Subspace k = kernel_basis(Matrix::from_ints(f2, 1, 2, {1, 1}));
  ASSERT_EQ(k.dim(), 1u);
  EXPECT_EQ(k.vector(0), (Vector{1, 1}));
}

TEST(Solve, Examples) {
  const Vector b{3, Scalar(-1, 2)};
  EXPECT_EQ(solve(Matrix::identity(Q, 2), b), b);
  EXPECT_FALSE(solve(Matrix::from_ints(Q, 2, 2, {1, 0, 0, 0}), Vector{0, 1}).has_value());
  EXPECT_EQ(solve(Matrix::from_ints(Q, 1, 2, {1, 1}), Vector{2}), (Vector{2, 0}));
  EXPECT_THROW(solve(Matrix::identity(Q, 2), Vector{1}), Error);
}

TEST(Lattice, Examples) {
  const Vector v[] = {{1, 2, 0}, {0, 1, 1}};
  const Subspace u = Subspace::span(Q, 3, v);
  EXPECT_EQ(subspace_sum(u, u), u);
  EXPECT_EQ(subspace_intersect(u, Subspace::full(Q, 3)), u);
  EXPECT_EQ(preimage(Matrix(Q, 3, 4), u), Subspace::full(Q, 4));
  EXPECT_THROW(subspace_sum(u, Subspace::full(Q, 2)), Error);
}

TEST(Lattice, PreimageMatchesDefinition) {
  // m = projection onto the first coordinate; preimage of span{e1} is everything.
  const Matrix m = Matrix::from_ints(Q, 2, 2, {1, 0, 0, 0});
  const Vector e1[] = {{1, 0}};
  EXPECT_EQ(preimage(m, Subspace::span(Q, 2, e1)).dim(), 2u);
  const Vector e2[] = {{0, 1}};
  const Subspace pre = preimage(m, Subspace::span(Q, 2, e2));
  ASSERT_EQ(pre.dim(), 1u);
  EXPECT_EQ(pre.vector(0), (Vector{0, 1}));
}

class Randomized : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(Randomized, RankOfTransposeAndRankNullity) {
  std::mt19937_64 rng(GetParam());
  for (const FieldSpec f : {Q, FieldSpec::prime(101)}) {
    for (int t = 0; t < 10; ++t) {
      const Matrix m = random_low_rank(f, 2 + rng() % 6, 2 + rng() % 6, 1 + rng() % 4, rng);
      EXPECT_EQ(rank(m), rank(m.transpose()));
      EXPECT_EQ(kernel_basis(m).dim() + rank(m), m.cols());
      EXPECT_TRUE((m * kernel_basis(m).basis()).is_zero());
    }
  }
}

TEST_P(Randomized, ModularLaw) {
  std::mt19937_64 rng(GetParam());
  for (int t = 0; t < 10; ++t) {
    const std::size_t n = 3 + rng() % 5;
    const Subspace u = Subspace::column_space(random_low_rank(Q, n, 4, 1 + rng() % 3, rng));
    const Subspace v = Subspace::column_space(random_low_rank(Q, n, 4, 1 + rng() % 3, rng));
    const Subspace s = subspace_sum(u, v);
    const Subspace i = subspace_intersect(u, v);
    EXPECT_EQ(s.dim() + i.dim(), u.dim() + v.dim());
    EXPECT_TRUE(s.contains(u) && s.contains(v));
    EXPECT_TRUE(u.contains(i) && v.contains(i));
  }
}

TEST_P(Randomized, CanonicalFormIgnoresBasisChoice) {
  std::mt19937_64 rng(GetParam());
  for (int t = 0; t < 10; ++t) {
    const Matrix gens = random_int_matrix(Q, 6, 3, -3, 3, rng);
    const Matrix change = random_int_matrix(Q, 3, 3, -3, 3, rng);
    if (rank(change) < 3) continue;
    const Subspace a = Subspace::column_space(gens);
    const Subspace b = Subspace::column_space(gens * change);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.rows(), b.rows());
  }
}

TEST_P(Randomized, SolveFindsSolutionsInTheImage) {
  std::mt19937_64 rng(GetParam());
  for (int t = 0; t < 10; ++t) {
    const Matrix m = random_low_rank(Q, 5, 6, 3, rng);
    const Matrix x = random_int_matrix(Q, 6, 1, -4, 4, rng);
    const Vector b = (m * x).column(0);
    const auto sol = solve(m, b);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(m.apply(*sol), b);
  }
}

TEST_P(Randomized, RationalAndModularRanksAgree) {
  std::mt19937_64 rng(GetParam());
  const Matrix mq = random_int_matrix(Q, 20, 20, -9, 9, rng);
  const std::size_t rq = rank(mq);
  for (std::uint64_t p : {32749u, 65521u}) {
    const FieldSpec f = FieldSpec::prime(p);
    Matrix mp(f, 20, 20);
    for (std::size_t r = 0; r < 20; ++r) {
      for (std::size_t c = 0; c < 20; ++c) mp(r, c) = f.reduce(mq(r, c));
    }
    EXPECT_EQ(rank(mp), rq) << "p = " << p;
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, Randomized, ::testing::Values(1u, 2u, 3u, 17u, 2024u));

}  // namespace
