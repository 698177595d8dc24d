#pragma once

#include <optional>
#include <vector>

#include "exactlin/matrix.hpp"

namespace gobelin {

// Reduced row echelon form with pivots chosen as the first nonzero entry in
// column order. Deterministic, so equal row spaces give identical output.
struct Echelon {
  Matrix reduced;                   // nonzero rows only
  std::vector<std::size_t> pivots;  // pivot column of each row, increasing
};

Echelon row_echelon(const Matrix& m);

// A linear subspace of K^n kept in canonical form: the rows of `rows()` are
// the reduced row echelon basis (equivalently, the columns of `basis()` are in
// reduced column echelon form). Two Subspace values are equal iff the spaces are.
class Subspace {
 public:
  Subspace() = default;
  Subspace(FieldSpec field, std::size_t ambient_dim);  // zero subspace

  static Subspace full(FieldSpec field, std::size_t ambient_dim);
  static Subspace span(FieldSpec field, std::size_t ambient_dim, std::span<const Vector> vectors);
  static Subspace column_space(const Matrix& m);
  static Subspace row_space(const Matrix& m);

  const FieldSpec& field() const { return echelon_.reduced.field(); }
  std::size_t ambient_dim() const { return echelon_.reduced.cols(); }
  std::size_t dim() const { return echelon_.reduced.rows(); }

  const Matrix& rows() const { return echelon_.reduced; }
  const std::vector<std::size_t>& pivots() const { return echelon_.pivots; }
  Matrix basis() const { return echelon_.reduced.transpose(); }
  Vector vector(std::size_t i) const { return echelon_.reduced.row(i); }
  std::vector<Vector> vectors() const;

  // v minus its reduction along the pivots; zero iff v is in the subspace.
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  // Coordinates of a member v in the canonical basis.
  Vector coordinates(const Vector& v) const;
  // Rows spanning the annihilator {w : w.v = 0 for all v in the subspace}.
  Matrix annihilator_rows() const;

  friend bool operator==(const Subspace& a, const Subspace& b);
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  explicit Subspace(Echelon e) : echelon_(std::move(e)) {}

  Echelon echelon_;
};

std::size_t rank(const Matrix& m);
Subspace kernel_basis(const Matrix& m);
Subspace image(const Matrix& m);
// One solution of m x = b with free variables set to zero, or nullopt.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);
// { x : m x in v }
Subspace preimage(const Matrix& m, const Subspace& v);
// { m x : x in u }
Subspace map_subspace(const Matrix& m, const Subspace& u);

}  // namespace gobelin
