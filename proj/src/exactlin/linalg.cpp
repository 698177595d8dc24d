#include "exactlin/linalg.hpp"

#include <cstdint>
#include <utility>

namespace gobelin {

namespace {

// Gauss-Jordan over Q. Works on a copy; returns the nonzero reduced rows.
Echelon rref_rational(const Matrix& m) {
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  std::vector<Vector> rows(nr);
  for (std::size_t r = 0; r < nr; ++r) rows[r] = m.row(r);

  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  Scalar factor;
  for (std::size_t c = 0; c < nc && next < nr; ++c) {
    std::size_t pr = next;
    while (pr < nr && sgn(rows[pr][c]) == 0) ++pr;
    if (pr == nr) continue;
    std::swap(rows[next], rows[pr]);
    Vector& piv = rows[next];
    if (piv[c] != 1) {
      Scalar inv = 1 / piv[c];
      for (std::size_t k = c; k < nc; ++k) {
        if (sgn(piv[k]) != 0) piv[k] *= inv;
      }
    }
    for (std::size_t r = 0; r < nr; ++r) {
      if (r == next || sgn(rows[r][c]) == 0) continue;
      factor = rows[r][c];
      Vector& row = rows[r];
      for (std::size_t k = c; k < nc; ++k) {
        if (sgn(piv[k]) != 0) row[k] -= factor * piv[k];
      }
    }
    pivots.push_back(c);
    ++next;
  }
  Matrix reduced(m.field(), pivots.size(), nc);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    for (std::size_t k = 0; k < nc; ++k) reduced(r, k) = rows[r][k];
  }
  return {std::move(reduced), std::move(pivots)};
}

// Gauss-Jordan over F_p on machine words.
Echelon rref_modular(const Matrix& m) {
  const FieldSpec& f = m.field();
  const std::uint64_t p = f.characteristic();
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  std::vector<std::vector<std::uint32_t>> rows(nr, std::vector<std::uint32_t>(nc));
  for (std::size_t r = 0; r < nr; ++r) {
    for (std::size_t k = 0; k < nc; ++k) rows[r][k] = f.to_residue(m(r, k));
  }

  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < nc && next < nr; ++c) {
    std::size_t pr = next;
    while (pr < nr && rows[pr][c] == 0) ++pr;
    if (pr == nr) continue;
    std::swap(rows[next], rows[pr]);
    auto& piv = rows[next];
    if (piv[c] != 1) {
      const std::uint64_t inv = f.inv_residue(piv[c]);
      for (std::size_t k = c; k < nc; ++k) piv[k] = static_cast<std::uint32_t>(piv[k] * inv % p);
    }
    for (std::size_t r = 0; r < nr; ++r) {
      if (r == next || rows[r][c] == 0) continue;
      const std::uint64_t factor = p - rows[r][c];
      auto& row = rows[r];
      for (std::size_t k = c; k < nc; ++k) {
        if (piv[k] != 0) row[k] = static_cast<std::uint32_t>((row[k] + factor * piv[k]) % p);
      }
    }
    pivots.push_back(c);
    ++next;
  }
  Matrix reduced(f, pivots.size(), nc);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    for (std::size_t k = 0; k < nc; ++k) reduced(r, k) = static_cast<unsigned long>(rows[r][k]);
  }
  return {std::move(reduced), std::move(pivots)};
}

}  // namespace

Echelon row_echelon(const Matrix& m) {
  m.check_entries();
  return m.field().is_rational() ? rref_rational(m) : rref_modular(m);
}

Subspace::Subspace(FieldSpec field, std::size_t ambient_dim)
    : echelon_{Matrix(field, 0, ambient_dim), {}} {}

Subspace Subspace::full(FieldSpec field, std::size_t ambient_dim) {
  std::vector<std::size_t> pivots(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) pivots[i] = i;
  return Subspace(Echelon{Matrix::identity(field, ambient_dim), std::move(pivots)});
}

Subspace Subspace::span(FieldSpec field, std::size_t ambient_dim, std::span<const Vector> vectors) {
  return Subspace(row_echelon(Matrix::from_rows(field, ambient_dim, vectors)));
}

Subspace Subspace::column_space(const Matrix& m) { return Subspace(row_echelon(m.transpose())); }

Subspace Subspace::row_space(const Matrix& m) { return Subspace(row_echelon(m)); }

std::vector<Vector> Subspace::vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(vector(i));
  return out;
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_dim()) {
    throw Error(ErrorKind::Input, "reduce: vector of length " + std::to_string(v.size()) +
                                      " in ambient dimension " + std::to_string(ambient_dim()));
  }
  const FieldSpec& f = field();
  Vector out = v;
  const Matrix& r = echelon_.reduced;
  for (std::size_t i = 0; i < dim(); ++i) {
    const std::size_t p = echelon_.pivots[i];
    if (sgn(out[p]) == 0) continue;
    const Scalar c = out[p];
    for (std::size_t k = p; k < ambient_dim(); ++k) {
      if (sgn(r(i, k)) != 0) out[k] = f.sub(out[k], f.mul(c, r(i, k)));
    }
  }
  return out;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  require_same_field(field(), other.field(), "subspace containment");
  if (other.ambient_dim() != ambient_dim()) return false;
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.vector(i))) return false;
  }
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw Error(ErrorKind::Input, "coordinates: vector not in subspace");
  Vector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = v[echelon_.pivots[i]];
  return out;
}

Matrix Subspace::annihilator_rows() const { return kernel_basis(echelon_.reduced).rows(); }

bool operator==(const Subspace& a, const Subspace& b) {
  return a.echelon_.pivots == b.echelon_.pivots && a.echelon_.reduced == b.echelon_.reduced;
}

std::size_t rank(const Matrix& m) { return row_echelon(m).pivots.size(); }

Subspace kernel_basis(const Matrix& m) {
  const FieldSpec& f = m.field();
  const std::size_t n = m.cols();
  Echelon e = row_echelon(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector x(n);
    x[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = f.neg(e.reduced(i, free));
    basis.push_back(std::move(x));
  }
  return Subspace::span(f, n, basis);
}

Subspace image(const Matrix& m) { return Subspace::column_space(m); }

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) {
    throw Error(ErrorKind::Input, "solve: right-hand side of length " + std::to_string(b.size()) +
                                      " for " + std::to_string(m.rows()) + " rows");
  }
  const std::size_t n = m.cols();
  Matrix aug(m.field(), m.rows(), n + 1);
  aug.set_block(0, 0, m);
  for (std::size_t r = 0; r < m.rows(); ++r) aug(r, n) = b[r];
  Echelon e = row_echelon(aug);
  if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;
  Vector x(n);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, n);
  return x;
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  require_same_field(u.field(), v.field(), "subspace sum");
  if (u.ambient_dim() != v.ambient_dim()) throw Error(ErrorKind::Input, "subspace sum: ambient mismatch");
  return Subspace::row_space(Matrix::vstack(u.rows(), v.rows()));
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  require_same_field(u.field(), v.field(), "subspace intersection");
  if (u.ambient_dim() != v.ambient_dim()) {
    throw Error(ErrorKind::Input, "subspace intersection: ambient mismatch");
  }
  // x = U^T y lies in v iff A_v U^T y = 0.
  const Matrix ut = u.basis();
  const Matrix constraint = v.annihilator_rows() * ut;
  return map_subspace(ut, kernel_basis(constraint));
}

Subspace preimage(const Matrix& m, const Subspace& v) {
  require_same_field(m.field(), v.field(), "preimage");
  if (m.rows() != v.ambient_dim()) throw Error(ErrorKind::Input, "preimage: ambient mismatch");
  if (v.dim() == v.ambient_dim()) return Subspace::full(m.field(), m.cols());
  return kernel_basis(v.annihilator_rows() * m);
}

Subspace map_subspace(const Matrix& m, const Subspace& u) {
  require_same_field(m.field(), u.field(), "map_subspace");
  if (m.cols() != u.ambient_dim()) throw Error(ErrorKind::Input, "map_subspace: ambient mismatch");
  if (u.dim() == 0) return Subspace(m.field(), m.rows());
  return Subspace::column_space(m * u.basis());
}

}  // namespace gobelin
