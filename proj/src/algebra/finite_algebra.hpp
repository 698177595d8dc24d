#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "exactlin/linalg.hpp"

namespace gobelin {

// A commutative unital algebra of finite dimension mu over a field, given by
// the multiplication operators of its basis elements. Immutable.
class FiniteAlgebra {
 public:
  // ops[i] is the matrix of b -> e_i * b, so column j holds e_i * e_j.
  // Throws InputError on shape problems and, for mu <= 20, on failures of
  // commutativity, associativity or the unit law.
  FiniteAlgebra(FieldSpec field, std::vector<std::string> labels, std::vector<Matrix> ops, Vector unit);

  const FieldSpec& field() const { return field_; }
  std::size_t mu() const { return ops_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vector& unit() const { return unit_; }
  Vector basis_element(std::size_t i) const;
  Vector zero() const { return Vector(mu()); }

  const Matrix& basis_operator(std::size_t i) const { return ops_.at(i); }
  // Coefficient of e_k in e_i * e_j.
  const Scalar& structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    return ops_[i](k, j);
  }

  Matrix mult_operator(const Vector& a) const;
  Vector multiply(const Vector& a, const Vector& b) const;
  Vector add(const Vector& a, const Vector& b) const;
  Vector sub(const Vector& a, const Vector& b) const;
  Vector neg(const Vector& a) const;
  Vector scale(const Scalar& c, const Vector& a) const;
  Vector power(const Vector& a, std::uint64_t e) const;
  bool is_invertible(const Vector& a) const;

  // Empty string when the table is a commutative associative unital algebra.
  std::string validation_error() const;

  std::string format(const Vector& a) const;

 private:
  void require_element(const Vector& a, const char* what) const;

  FieldSpec field_;
  std::vector<std::string> labels_;
  std::vector<Matrix> ops_;
  Vector unit_;
};

using AlgebraPtr = std::shared_ptr<const FiniteAlgebra>;

// An element tied to its algebra. Internal code passes bare coordinate
// vectors; this wrapper is the checked form used at API boundaries.
struct AlgebraElement {
  AlgebraPtr algebra;
  Vector coords;
};

AlgebraElement make_element(const AlgebraPtr& algebra, Vector coords);
// InputError when the operands live in different algebras.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
Matrix mult_operator(const AlgebraElement& a);

}  // namespace gobelin
