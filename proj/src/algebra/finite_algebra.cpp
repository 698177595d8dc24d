#include "algebra/finite_algebra.hpp"

#include <sstream>

namespace gobelin {

FiniteAlgebra::FiniteAlgebra(FieldSpec field, std::vector<std::string> labels, std::vector<Matrix> ops,
                             Vector unit)
    : field_(field), labels_(std::move(labels)), ops_(std::move(ops)), unit_(std::move(unit)) {
  const std::size_t n = ops_.size();
  if (n == 0) throw Error(ErrorKind::Input, "algebra of dimension 0");
  if (labels_.size() != n) throw Error(ErrorKind::Input, "algebra: label count differs from dimension");
  if (unit_.size() != n) throw Error(ErrorKind::Input, "algebra: unit has wrong length");
  for (const auto& m : ops_) {
    if (m.rows() != n || m.cols() != n) throw Error(ErrorKind::Input, "algebra: operator of wrong shape");
    require_same_field(m.field(), field_, "algebra");
    m.check_entries();
  }
  if (n <= 20) {
    const std::string err = validation_error();
    if (!err.empty()) throw Error(ErrorKind::Input, "algebra: " + err);
  }
}

Vector FiniteAlgebra::basis_element(std::size_t i) const {
  Vector v(mu());
  v.at(i) = 1;
  return v;
}

void FiniteAlgebra::require_element(const Vector& a, const char* what) const {
  if (a.size() != mu()) {
    throw Error(ErrorKind::Input, std::string(what) + ": element of length " + std::to_string(a.size()) +
                                      " in algebra of dimension " + std::to_string(mu()));
  }
}

Matrix FiniteAlgebra::mult_operator(const Vector& a) const {
  require_element(a, "mult_operator");
  Matrix out(field_, mu(), mu());
  for (std::size_t i = 0; i < mu(); ++i) {
    if (sgn(a[i]) == 0) continue;
    const Matrix& op = ops_[i];
    for (std::size_t r = 0; r < mu(); ++r) {
      for (std::size_t c = 0; c < mu(); ++c) {
        if (sgn(op(r, c)) != 0) out(r, c) += a[i] * op(r, c);
      }
    }
  }
  if (!field_.is_rational()) {
    for (std::size_t r = 0; r < mu(); ++r) {
      for (std::size_t c = 0; c < mu(); ++c) out(r, c) = field_.reduce(out(r, c));
    }
  }
  return out;
}

Vector FiniteAlgebra::multiply(const Vector& a, const Vector& b) const {
  require_element(a, "multiply");
  require_element(b, "multiply");
  Vector out(mu());
  Scalar acc;
  for (std::size_t i = 0; i < mu(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < mu(); ++j) {
      if (sgn(b[j]) == 0) continue;
      const Scalar ab = a[i] * b[j];
      for (std::size_t k = 0; k < mu(); ++k) {
        const Scalar& c = ops_[i](k, j);
        if (sgn(c) != 0) out[k] += ab * c;
      }
    }
  }
  for (auto& v : out) v = field_.reduce(v);
  return out;
}

Vector FiniteAlgebra::add(const Vector& a, const Vector& b) const { return gobelin::add(field_, a, b); }
Vector FiniteAlgebra::sub(const Vector& a, const Vector& b) const { return gobelin::sub(field_, a, b); }
Vector FiniteAlgebra::neg(const Vector& a) const { return gobelin::scale(field_, Scalar(-1), a); }
Vector FiniteAlgebra::scale(const Scalar& c, const Vector& a) const { return gobelin::scale(field_, c, a); }

Vector FiniteAlgebra::power(const Vector& a, std::uint64_t e) const {
  Vector result = unit_;
  Vector base = a;
  while (e > 0) {
    if (e & 1u) result = multiply(result, base);
    e >>= 1;
    if (e > 0) base = multiply(base, base);
  }
  return result;
}

bool FiniteAlgebra::is_invertible(const Vector& a) const { return rank(mult_operator(a)) == mu(); }

std::string FiniteAlgebra::validation_error() const {
  const std::size_t n = mu();
  if (mult_operator(unit_) != Matrix::identity(field_, n)) return "unit law fails";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (ops_[i].column(j) != ops_[j].column(i)) {
        return "not commutative at (" + labels_[i] + ", " + labels_[j] + ")";
      }
    }
  }
  // (e_i e_j) e_k = e_i (e_j e_k) for all k  <=>  M_{e_i e_j} = M_i M_j.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (mult_operator(ops_[i].column(j)) != ops_[i] * ops_[j]) {
        return "not associative at (" + labels_[i] + ", " + labels_[j] + ")";
      }
    }
  }
  return {};
}

std::string FiniteAlgebra::format(const Vector& a) const {
  require_element(a, "format");
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < mu(); ++i) {
    if (sgn(a[i]) == 0) continue;
    Scalar c = a[i];
    const bool negative = field_.is_rational() && sgn(c) < 0;
    if (negative) c = -c;
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    const bool unit_label = labels_[i] == "1";
    if (unit_label) {
      os << c.get_str();
    } else if (c == 1) {
      os << labels_[i];
    } else {
      os << c.get_str() << "*" << labels_[i];
    }
  }
  return first ? "0" : os.str();
}

AlgebraElement make_element(const AlgebraPtr& algebra, Vector coords) {
  if (!algebra) throw Error(ErrorKind::Input, "element without an algebra");
  if (coords.size() != algebra->mu()) throw Error(ErrorKind::Input, "element has the wrong length");
  return {algebra, std::move(coords)};
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.algebra != b.algebra) throw Error(ErrorKind::Input, "multiply: elements of different algebras");
  return {a.algebra, a.algebra->multiply(a.coords, b.coords)};
}

Matrix mult_operator(const AlgebraElement& a) { return a.algebra->mult_operator(a.coords); }

}  // namespace gobelin
