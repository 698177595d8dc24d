#pragma once

#include <span>
#include <vector>

#include "algebra/finite_algebra.hpp"

namespace gobelin {

// A B-submodule of B^r, stored as its underlying K-subspace of K^{r mu}.
// Coordinates are block-major: component k occupies [k mu, (k+1) mu).
struct Submodule {
  std::size_t r = 1;
  Subspace space;

  std::size_t dim() const { return space.dim(); }
  friend bool operator==(const Submodule& a, const Submodule& b) { return a.r == b.r && a.space == b.space; }
  friend bool operator!=(const Submodule& a, const Submodule& b) { return !(a == b); }
};

// Vector helpers for B^r.
Vector component(const FiniteAlgebra& b, const Vector& v, std::size_t k);
Vector join(std::span<const Vector> parts);
Vector module_scale(const FiniteAlgebra& b, const Vector& a, const Vector& v);

// rmu x mu matrix of a -> a*v for v in B^r.
Matrix action_on(const FiniteAlgebra& b, const Vector& v);
// rmu x rmu block-diagonal matrix of v -> a*v on B^r.
Matrix block_operator(const FiniteAlgebra& b, const Vector& a, std::size_t r);

Submodule zero_module(const FiniteAlgebra& b, std::size_t r);
Submodule full_module(const FiniteAlgebra& b, std::size_t r);
Submodule submodule_generated(const FiniteAlgebra& b, std::size_t r, std::span<const Vector> gens);
Submodule ideal(const FiniteAlgebra& b, std::span<const Vector> gens);
Submodule ideal(const FiniteAlgebra& b, std::initializer_list<Vector> gens);
// Closure test against every basis multiplication operator.
bool is_submodule(const FiniteAlgebra& b, std::size_t r, const Subspace& s);

Submodule module_sum(const Submodule& m, const Submodule& n);
Submodule module_intersect(const Submodule& m, const Submodule& n);
// I * v for an ideal I and v in B^r.
Submodule ideal_times(const FiniteAlgebra& b, const Submodule& ideal, const Vector& v);
// I * J for ideals.
Submodule ideal_product(const FiniteAlgebra& b, const Submodule& i, const Submodule& j);

// {a : a*m = 0 for all m in M}.
Submodule annihilator(const FiniteAlgebra& b, const Submodule& m);
// {a : a*v in N}.
Submodule colon(const FiniteAlgebra& b, const Submodule& n, const Vector& v);
// (I : J) = {a : a*J in I} for ideals.
Submodule colon_ideal(const FiniteAlgebra& b, const Submodule& i, const Submodule& j);

struct SocleReport {
  Submodule nilradical;
  bool is_local = false;
  Submodule socle;
  bool is_gorenstein_local = false;
};

// Over Q the nilradical is the radical of the trace form. Over F_p it is the
// kernel of a power of the Frobenius a -> a^p, which is K-linear there.
SocleReport socle_and_checks(const FiniteAlgebra& b);

struct TraceMap {
  Vector functional;  // length mu
};

// Coordinate functional dual to the canonical socle vector. NotGorenstein
// unless the algebra is local with one-dimensional socle.
TraceMap choose_trace(const FiniteAlgebra& b);
// A second valid trace, different from `base`, built from the seed.
TraceMap alternative_trace(const FiniteAlgebra& b, const TraceMap& base, std::uint64_t seed);

Scalar trace_value(const FiniteAlgebra& b, const TraceMap& l, const Vector& a);
// u ._L v = sum_k L(u_k v_k) on B^r.
Scalar form(const FiniteAlgebra& b, const TraceMap& l, const Vector& u, const Vector& v);
// Row w -> w ._L v as a functional on B^r.
Vector form_row(const FiniteAlgebra& b, const TraceMap& l, const Vector& v);
// {w : w ._L v = 0 for all v in M}.
Submodule orthogonal(const FiniteAlgebra& b, const Submodule& m, const TraceMap& l);

// (a, b) -> (-b, a) on B^2.
Matrix kappa(const FiniteAlgebra& b);
Vector kappa(const FiniteAlgebra& b, const Vector& v);

}  // namespace gobelin
