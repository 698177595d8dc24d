#pragma once

#include <string>
#include <vector>

#include "algebra/ideals.hpp"

namespace gobelin {

// Matrix with entries in B (each entry a coordinate vector of length mu).
class BMatrix {
 public:
  BMatrix() = default;
  BMatrix(AlgebraPtr algebra, std::size_t rows, std::size_t cols);

  const AlgebraPtr& algebra() const { return algebra_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Vector& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, const Vector& v);

  // Transpose over B (entries are not transposed as K-matrices).
  BMatrix transpose() const;
  BMatrix operator*(const BMatrix& o) const;
  bool is_zero() const;
  std::string format() const;

 private:
  AlgebraPtr algebra_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Vector> entries_;
};

// Each entry b becomes mult_operator(b); block (i, j) sits at rows i mu.., cols j mu..
Matrix expand(const BMatrix& m);

// Z / W with W inside Z. The coset basis is the echelon basis of Z reduced
// modulo W, so it is canonical and lies inside Z.
class Subquotient {
 public:
  Subquotient() = default;
  // Throws ComplexBroken when W is not contained in Z.
  Subquotient(Subspace cycles, Subspace boundaries);

  const Subspace& cycles() const { return z_; }
  const Subspace& boundaries() const { return w_; }
  const Subspace& complement() const { return c_; }
  std::size_t dim() const { return c_.dim(); }
  std::size_t ambient_dim() const { return z_.ambient_dim(); }
  const FieldSpec& field() const { return z_.field(); }

  std::vector<Vector> coset_basis() const { return c_.vectors(); }
  bool is_cycle(const Vector& v) const { return z_.contains(v); }
  bool is_boundary(const Vector& v) const { return w_.contains(v); }
  // Coordinates of v + W in the coset basis. NotACycle unless v is in Z.
  Vector class_coords(const Vector& v) const;
  Vector representative(const Vector& coords) const;
  // Span of the classes of a subspace of Z, in coset coordinates.
  Subspace classes_of(const Subspace& s) const;
  // Preimage in Z of a subspace of coset coordinates (always contains W).
  Subspace lift(const Subspace& coords) const;

 private:
  Subspace z_;
  Subspace w_;
  Subspace c_;
};

// Matrix of the map induced by f on coset coordinates. NotChainCompatible
// unless f(Z_src) lies in Z_dst and f(W_src) in W_dst.
Matrix induced_map(const Subquotient& src, const Subquotient& dst, const Matrix& f);

enum class Direction { Chain, Cochain };

// Finite complex of K-vector spaces. For a chain complex maps[i] is
// d_{i+1}: term i+1 -> term i; for a cochain complex maps[i] is
// delta^i: term i -> term i+1.
class ScalarComplex {
 public:
  ScalarComplex() = default;
  ScalarComplex(Direction dir, std::vector<std::size_t> term_dims, std::vector<Matrix> maps);

  static ScalarComplex from_bmatrices(Direction dir, const std::vector<std::size_t>& term_ranks,
                                      const std::vector<BMatrix>& maps);

  Direction direction() const { return dir_; }
  std::size_t length() const { return dims_.size(); }
  std::size_t term_dim(std::size_t i) const { return dims_.at(i); }
  const std::vector<Matrix>& maps() const { return maps_; }

  // Map leaving / entering term i; zero matrices past the ends.
  Matrix outgoing(std::size_t i) const;
  Matrix incoming(std::size_t i) const;

  // Index of the first composite that is nonzero, or -1.
  long first_broken() const;
  // ComplexBroken unless every composite vanishes.
  void check() const;

  Subquotient homology_at(std::size_t i) const;

  // Alternating sums of term dimensions and homology dimensions over the
  // whole (truncated) complex.
  std::pair<long, long> euler_characteristics() const;

 private:
  Direction dir_ = Direction::Chain;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> maps_;
  FieldSpec field_;
};

}  // namespace gobelin
