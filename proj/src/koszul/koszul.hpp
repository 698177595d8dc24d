#pragma once

#include <vector>

#include "homology/checks.hpp"

namespace gobelin {

// Two syzygies tau_i = (c_i1, c_i2) of (f1, f2): c_i1 f1 + c_i2 f2 = 0.
// tau vectors live in B^2 with block-major coordinates.
struct SyzygyPair {
  AlgebraPtr algebra;
  Vector f1, f2;
  Vector tau1, tau2;

  Vector c11() const { return component(*algebra, tau1, 0); }
  Vector c12() const { return component(*algebra, tau1, 1); }
  Vector c21() const { return component(*algebra, tau2, 0); }
  Vector c22() const { return component(*algebra, tau2, 1); }
  SyzygyPair swapped() const { return {algebra, f1, f2, tau2, tau1}; }
};

SyzygyPair make_syzygy_pair(const AlgebraPtr& b, const Vector& f1, const Vector& f2, const Vector& c11,
                            const Vector& c12, const Vector& c21, const Vector& c22);
// SyzygyViolation naming the first row that does not vanish.
void check_syzygies(const SyzygyPair& s);

struct KoszulData {
  AlgebraPtr algebra;
  TraceMap trace;
  Vector f1, f2;
  ScalarComplex complex;  // B <- B^2 <- B
  ScalarComplex dual;     // B -> B^2 -> B
  Subquotient h0, h1, h2;
  Subquotient co0, co1, co2;
  std::size_t nu = 0, nu1 = 0, nu2 = 0;
  // Antisymmetric forms <u, v> = u ._L kappa(v) on the coset bases of H1 / H^1.
  Matrix gram_h1, gram_co1;
};

// UnitElement if f1 or f2 is invertible.
KoszulData koszul(const AlgebraPtr& b, const TraceMap& trace, const Vector& f1, const Vector& f2);

// Class of a * representative(cls) in H1.
Vector h1_action(const KoszulData& k, const Vector& a, const Vector& cls);
// dim of the submodule B * tau of H1.
std::size_t class_module_dim(const KoszulData& k, const Vector& tau);
// Classes of B * tau in H1 coset coordinates.
Subspace class_module(const KoszulData& k, const Vector& tau);

// {a : a tauB in I tauA + boundaries}. NotACycle unless both tau are cycles.
Submodule colon_in_h1(const KoszulData& k, const Submodule& ideal, const Vector& tauA, const Vector& tauB);

// Orthogonal of a subspace of H1 coset coordinates for the induced form.
Subspace h1_perp(const KoszulData& k, const Subspace& classes);
Subspace co1_perp(const KoszulData& k, const Subspace& classes);

// kappa induced from H1 to H^1 on coset bases.
Matrix kappa_iso(const KoszulData& k);

// Both short exact sequences relating H1 to annihilators and colon ideals.
std::vector<Check> koszul_sequences_check(const KoszulData& k);
// Dimension identities between nu, nu1, nu2 and the ideals built from f1, f2.
std::vector<Check> dimension_table(const KoszulData& k);
// dim H0 = dim H2 = nu, dim H1 = 2 nu, form nondegeneracy, kappa compatibility.
std::vector<Check> koszul_invariants(const KoszulData& k);

}  // namespace gobelin
