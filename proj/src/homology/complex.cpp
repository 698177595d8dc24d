#include "homology/complex.hpp"

#include <sstream>

namespace gobelin {

BMatrix::BMatrix(AlgebraPtr algebra, std::size_t rows, std::size_t cols)
    : algebra_(std::move(algebra)), rows_(rows), cols_(cols), entries_(rows * cols, algebra_->zero()) {}

void BMatrix::set(std::size_t r, std::size_t c, const Vector& v) {
  if (r >= rows_ || c >= cols_) throw Error(ErrorKind::Input, "BMatrix::set out of range");
  if (v.size() != algebra_->mu()) throw Error(ErrorKind::Input, "BMatrix entry of the wrong length");
  entries_[r * cols_ + c] = v;
}

BMatrix BMatrix::transpose() const {
  BMatrix t(algebra_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.entries_[c * rows_ + r] = at(r, c);
  }
  return t;
}

BMatrix BMatrix::operator*(const BMatrix& o) const {
  if (algebra_ != o.algebra_) throw Error(ErrorKind::Input, "BMatrix product: different algebras");
  if (cols_ != o.rows_) throw Error(ErrorKind::Input, "BMatrix product: shape mismatch");
  BMatrix out(algebra_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < o.cols_; ++j) {
      Vector acc = algebra_->zero();
      for (std::size_t k = 0; k < cols_; ++k) acc = algebra_->add(acc, algebra_->multiply(at(i, k), o.at(k, j)));
      out.entries_[i * o.cols_ + j] = acc;
    }
  }
  return out;
}

bool BMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!gobelin::is_zero(e)) return false;
  }
  return true;
}

std::string BMatrix::format() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << "(";
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << algebra_->format(at(r, c));
    os << ")" << (r + 1 < rows_ ? "\n" : "");
  }
  return os.str();
}

Matrix expand(const BMatrix& m) {
  const FiniteAlgebra& b = *m.algebra();
  const std::size_t mu = b.mu();
  Matrix out(b.field(), m.rows() * mu, m.cols() * mu);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (is_zero(m.at(r, c))) continue;
      out.set_block(r * mu, c * mu, b.mult_operator(m.at(r, c)));
    }
  }
  return out;
}

Subquotient::Subquotient(Subspace cycles, Subspace boundaries) : z_(std::move(cycles)), w_(std::move(boundaries)) {
  if (!z_.contains(w_)) throw Error(ErrorKind::ComplexBroken, "boundaries are not contained in cycles");
  std::vector<Vector> reduced;
  reduced.reserve(z_.dim());
  for (std::size_t i = 0; i < z_.dim(); ++i) reduced.push_back(w_.reduce(z_.vector(i)));
  c_ = Subspace::span(z_.field(), z_.ambient_dim(), reduced);
}

Vector Subquotient::class_coords(const Vector& v) const {
  if (!z_.contains(v)) throw Error(ErrorKind::NotACycle, "vector is not a cycle");
  return c_.coordinates(w_.reduce(v));
}

Vector Subquotient::representative(const Vector& coords) const {
  if (coords.size() != dim()) throw Error(ErrorKind::Input, "class coordinates of the wrong length");
  const FieldSpec& f = field();
  Vector out(ambient_dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(coords[i]) == 0) continue;
    out = add(f, out, scale(f, coords[i], c_.vector(i)));
  }
  return out;
}

Subspace Subquotient::classes_of(const Subspace& s) const {
  std::vector<Vector> coords;
  for (std::size_t i = 0; i < s.dim(); ++i) coords.push_back(class_coords(s.vector(i)));
  return Subspace::span(field(), dim(), coords);
}

Subspace Subquotient::lift(const Subspace& coords) const {
  std::vector<Vector> reps;
  for (std::size_t i = 0; i < coords.dim(); ++i) reps.push_back(representative(coords.vector(i)));
  return subspace_sum(w_, Subspace::span(field(), ambient_dim(), reps));
}

Matrix induced_map(const Subquotient& src, const Subquotient& dst, const Matrix& f) {
  if (f.cols() != src.ambient_dim() || f.rows() != dst.ambient_dim()) {
    throw Error(ErrorKind::Input, "induced_map: matrix shape does not match the subquotients");
  }
  for (std::size_t i = 0; i < src.boundaries().dim(); ++i) {
    if (!dst.is_boundary(f.apply(src.boundaries().vector(i)))) {
      throw Error(ErrorKind::NotChainCompatible, "map sends a boundary outside the target boundaries");
    }
  }
  Matrix out(src.field(), dst.dim(), src.dim());
  for (std::size_t j = 0; j < src.dim(); ++j) {
    const Vector image = f.apply(src.complement().vector(j));
    if (!dst.is_cycle(image)) throw Error(ErrorKind::NotChainCompatible, "map sends a cycle outside the target cycles");
    const Vector c = dst.class_coords(image);
    for (std::size_t i = 0; i < dst.dim(); ++i) out(i, j) = c[i];
  }
  return out;
}

ScalarComplex::ScalarComplex(Direction dir, std::vector<std::size_t> term_dims, std::vector<Matrix> maps)
    : dir_(dir), dims_(std::move(term_dims)), maps_(std::move(maps)) {
  if (dims_.empty()) throw Error(ErrorKind::Input, "complex without terms");
  if (maps_.size() + 1 != dims_.size()) throw Error(ErrorKind::Input, "complex needs one map between consecutive terms");
  if (!maps_.empty()) field_ = maps_.front().field();
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    const std::size_t src = dir_ == Direction::Chain ? i + 1 : i;
    const std::size_t dst = dir_ == Direction::Chain ? i : i + 1;
    if (maps_[i].cols() != dims_[src] || maps_[i].rows() != dims_[dst]) {
      throw Error(ErrorKind::Input, "complex map " + std::to_string(i) + " has the wrong shape");
    }
    require_same_field(maps_[i].field(), field_, "complex");
  }
}

ScalarComplex ScalarComplex::from_bmatrices(Direction dir, const std::vector<std::size_t>& term_ranks,
                                            const std::vector<BMatrix>& maps) {
  if (maps.empty()) throw Error(ErrorKind::Input, "from_bmatrices needs at least one map");
  const std::size_t mu = maps.front().algebra()->mu();
  std::vector<std::size_t> dims;
  for (auto r : term_ranks) dims.push_back(r * mu);
  std::vector<Matrix> scalar;
  for (const auto& m : maps) scalar.push_back(expand(m));
  return ScalarComplex(dir, std::move(dims), std::move(scalar));
}

Matrix ScalarComplex::outgoing(std::size_t i) const {
  if (dir_ == Direction::Chain) {
    if (i == 0) return Matrix(field_, 0, dims_[0]);
    return maps_.at(i - 1);
  }
  if (i < maps_.size()) return maps_[i];
  return Matrix(field_, 0, dims_.at(i));
}

Matrix ScalarComplex::incoming(std::size_t i) const {
  if (dir_ == Direction::Chain) {
    if (i < maps_.size()) return maps_[i];
    return Matrix(field_, dims_.at(i), 0);
  }
  if (i == 0) return Matrix(field_, dims_[0], 0);
  return maps_.at(i - 1);
}

long ScalarComplex::first_broken() const {
  for (std::size_t i = 0; i + 1 < maps_.size(); ++i) {
    const Matrix comp = dir_ == Direction::Chain ? maps_[i] * maps_[i + 1] : maps_[i + 1] * maps_[i];
    if (!comp.is_zero()) return static_cast<long>(i);
  }
  return -1;
}

void ScalarComplex::check() const {
  const long bad = first_broken();
  if (bad >= 0) {
    throw Error(ErrorKind::ComplexBroken,
                "composite of maps " + std::to_string(bad) + " and " + std::to_string(bad + 1) + " is nonzero");
  }
}

Subquotient ScalarComplex::homology_at(std::size_t i) const {
  if (i >= dims_.size()) throw Error(ErrorKind::Input, "homology degree out of range");
  return Subquotient(kernel_basis(outgoing(i)), image(incoming(i)));
}

std::pair<long, long> ScalarComplex::euler_characteristics() const {
  long terms = 0;
  long homology = 0;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    const long sign = i % 2 == 0 ? 1 : -1;
    terms += sign * static_cast<long>(dims_[i]);
    homology += sign * static_cast<long>(homology_at(i).dim());
  }
  return {terms, homology};
}

}  // namespace gobelin
