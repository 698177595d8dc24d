#pragma once

#include <memory>
#include <string>
#include <vector>

#include "algebra/finite_algebra.hpp"
#include "polyring/polynomial.hpp"

namespace gobelin {

// Full reduction of f modulo g (each element of g monic), remainder only.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& g, const MonomialOrder& order);

// Reduced Groebner basis, monic, sorted by increasing leading monomial.
// S-pairs are taken in order of their lcm (normal selection); pairs with
// coprime leading monomials are skipped.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order);

struct QuotientPresentation {
  FieldSpec field;
  std::vector<std::string> variables;
  std::vector<Polynomial> generators;
  MonomialOrder order;
};

// K[x]/I with its Groebner basis and standard-monomial basis.
class QuotientRing {
 public:
  // Throws NotZeroDimensional when some variable has no pure power among the
  // leading monomials, InputError when I is the unit ideal.
  static QuotientRing build(const QuotientPresentation& p);

  const QuotientPresentation& presentation() const { return pres_; }
  const std::vector<Polynomial>& groebner_basis() const { return gb_; }
  const std::vector<Monomial>& standard_monomials() const { return basis_; }
  const AlgebraPtr& algebra() const { return algebra_; }

  Polynomial normal_form(const Polynomial& f) const;
  // Coordinates of the class of f in the standard-monomial basis.
  Vector element(const Polynomial& f) const;
  Polynomial lift(const Vector& coords) const;

 private:
  QuotientPresentation pres_;
  std::vector<Polynomial> gb_;
  std::vector<Monomial> basis_;
  AlgebraPtr algebra_;
};

FiniteAlgebra build_quotient_algebra(const QuotientPresentation& p);

}  // namespace gobelin
