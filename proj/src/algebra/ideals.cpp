#include "algebra/ideals.hpp"

#include <random>

namespace gobelin {

Vector component(const FiniteAlgebra& b, const Vector& v, std::size_t k) {
  const std::size_t mu = b.mu();
  if (v.size() < (k + 1) * mu) throw Error(ErrorKind::Input, "component index out of range");
  return Vector(v.begin() + static_cast<std::ptrdiff_t>(k * mu),
                v.begin() + static_cast<std::ptrdiff_t>((k + 1) * mu));
}

Vector join(std::span<const Vector> parts) {
  Vector out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Vector module_scale(const FiniteAlgebra& b, const Vector& a, const Vector& v) {
  const std::size_t mu = b.mu();
  if (v.size() % mu != 0) throw Error(ErrorKind::Input, "module element length is not a multiple of mu");
  Vector out;
  out.reserve(v.size());
  for (std::size_t k = 0; k < v.size() / mu; ++k) {
    const Vector c = b.multiply(a, component(b, v, k));
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

Matrix action_on(const FiniteAlgebra& b, const Vector& v) {
  const std::size_t mu = b.mu();
  if (v.size() % mu != 0) throw Error(ErrorKind::Input, "module element length is not a multiple of mu");
  const std::size_t r = v.size() / mu;
  Matrix out(b.field(), r * mu, mu);
  for (std::size_t k = 0; k < r; ++k) out.set_block(k * mu, 0, b.mult_operator(component(b, v, k)));
  return out;
}

Matrix block_operator(const FiniteAlgebra& b, const Vector& a, std::size_t r) {
  const std::size_t mu = b.mu();
  const Matrix m = b.mult_operator(a);
  Matrix out(b.field(), r * mu, r * mu);
  for (std::size_t k = 0; k < r; ++k) out.set_block(k * mu, k * mu, m);
  return out;
}

Submodule zero_module(const FiniteAlgebra& b, std::size_t r) {
  return {r, Subspace(b.field(), r * b.mu())};
}

Submodule full_module(const FiniteAlgebra& b, std::size_t r) {
  return {r, Subspace::full(b.field(), r * b.mu())};
}

Submodule submodule_generated(const FiniteAlgebra& b, std::size_t r, std::span<const Vector> gens) {
  const std::size_t n = r * b.mu();
  // The basis contains the unit, so {e_i g} spans B g; the sum over g is closed.
  std::vector<Vector> spanning;
  for (const auto& g : gens) {
    if (g.size() != n) throw Error(ErrorKind::Input, "generator of the wrong length");
    if (is_zero(g)) continue;
    for (std::size_t i = 0; i < b.mu(); ++i) spanning.push_back(module_scale(b, b.basis_element(i), g));
  }
  return {r, Subspace::span(b.field(), n, spanning)};
}

Submodule ideal(const FiniteAlgebra& b, std::span<const Vector> gens) { return submodule_generated(b, 1, gens); }

Submodule ideal(const FiniteAlgebra& b, std::initializer_list<Vector> gens) {
  return submodule_generated(b, 1, std::span<const Vector>(gens.begin(), gens.size()));
}

bool is_submodule(const FiniteAlgebra& b, std::size_t r, const Subspace& s) {
  if (s.ambient_dim() != r * b.mu()) return false;
  for (std::size_t i = 0; i < b.mu(); ++i) {
    for (std::size_t k = 0; k < s.dim(); ++k) {
      if (!s.contains(module_scale(b, b.basis_element(i), s.vector(k)))) return false;
    }
  }
  return true;
}

Submodule module_sum(const Submodule& m, const Submodule& n) {
  if (m.r != n.r) throw Error(ErrorKind::Input, "module sum: rank mismatch");
  return {m.r, subspace_sum(m.space, n.space)};
}

Submodule module_intersect(const Submodule& m, const Submodule& n) {
  if (m.r != n.r) throw Error(ErrorKind::Input, "module intersection: rank mismatch");
  return {m.r, subspace_intersect(m.space, n.space)};
}

Submodule ideal_times(const FiniteAlgebra& b, const Submodule& ideal, const Vector& v) {
  if (ideal.r != 1) throw Error(ErrorKind::Input, "ideal_times: expected an ideal");
  const std::size_t r = v.size() / b.mu();
  return {r, map_subspace(action_on(b, v), ideal.space)};
}

Submodule ideal_product(const FiniteAlgebra& b, const Submodule& i, const Submodule& j) {
  std::vector<Vector> gens;
  for (std::size_t k = 0; k < i.dim(); ++k) {
    for (std::size_t l = 0; l < j.dim(); ++l) gens.push_back(b.multiply(i.space.vector(k), j.space.vector(l)));
  }
  return ideal(b, gens);
}

Submodule annihilator(const FiniteAlgebra& b, const Submodule& m) {
  Matrix stacked(b.field(), 0, b.mu());
  for (std::size_t k = 0; k < m.dim(); ++k) stacked = Matrix::vstack(stacked, action_on(b, m.space.vector(k)));
  return {1, kernel_basis(stacked)};
}

Submodule colon(const FiniteAlgebra& b, const Submodule& n, const Vector& v) {
  if (v.size() != n.r * b.mu()) throw Error(ErrorKind::Input, "colon: vector outside the ambient module");
  return {1, preimage(action_on(b, v), n.space)};
}

Submodule colon_ideal(const FiniteAlgebra& b, const Submodule& i, const Submodule& j) {
  Submodule out = full_module(b, 1);
  for (std::size_t k = 0; k < j.dim(); ++k) out = module_intersect(out, colon(b, i, j.space.vector(k)));
  return out;
}

SocleReport socle_and_checks(const FiniteAlgebra& b) {
  const FieldSpec& f = b.field();
  const std::size_t mu = b.mu();
  Matrix radical_of(f, mu, mu);
  if (f.is_rational()) {
    Vector traces(mu);
    for (std::size_t k = 0; k < mu; ++k) {
      Scalar t = 0;
      for (std::size_t d = 0; d < mu; ++d) t += b.basis_operator(k)(d, d);
      traces[k] = t;
    }
    for (std::size_t i = 0; i < mu; ++i) {
      for (std::size_t j = 0; j < mu; ++j) {
        Scalar t = 0;
        for (std::size_t k = 0; k < mu; ++k) t += b.structure_constant(i, j, k) * traces[k];
        radical_of(i, j) = t;
      }
    }
  } else {
    const std::uint64_t p = f.characteristic();
    Matrix frob(f, mu, mu);
    for (std::size_t i = 0; i < mu; ++i) {
      const Vector col = b.power(b.basis_element(i), p);
      for (std::size_t k = 0; k < mu; ++k) frob(k, i) = col[k];
    }
    radical_of = frob;
    for (std::uint64_t reach = p; reach < mu; reach *= p) radical_of = radical_of * frob;
  }
  SocleReport rep;
  rep.nilradical = {1, kernel_basis(radical_of)};
  rep.is_local = mu - rep.nilradical.dim() == 1;
  rep.socle = annihilator(b, rep.nilradical);
  rep.is_gorenstein_local = rep.is_local && rep.socle.dim() == 1;
  return rep;
}

TraceMap choose_trace(const FiniteAlgebra& b) {
  const SocleReport rep = socle_and_checks(b);
  if (!rep.is_local) throw Error(ErrorKind::NotGorenstein, "algebra is not local");
  if (!rep.is_gorenstein_local) {
    throw Error(ErrorKind::NotGorenstein,
                "socle has dimension " + std::to_string(rep.socle.dim()) + ", expected 1");
  }
  Vector l(b.mu());
  l[rep.socle.space.pivots().at(0)] = 1;
  return {l};
}

TraceMap alternative_trace(const FiniteAlgebra& b, const TraceMap& base, std::uint64_t seed) {
  const SocleReport rep = socle_and_checks(b);
  const Vector s = rep.socle.space.vector(0);
  const FieldSpec& f = b.field();
  const Scalar ls = dot(f, base.functional, s);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-1, 1);
  const Scalar c = f.characteristic() == 2 ? Scalar(1) : Scalar(2);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Vector r(b.mu());
    for (auto& x : r) x = f.from_int(coeff(rng));
    // w = r - (r.s / l.s) l vanishes on the socle.
    const Scalar t = f.mul(dot(f, r, s), f.inv(ls));
    Vector out(b.mu());
    for (std::size_t i = 0; i < b.mu(); ++i) {
      out[i] = f.add(f.mul(c, base.functional[i]), f.sub(r[i], f.mul(t, base.functional[i])));
    }
    if (out != base.functional && sgn(dot(f, out, s)) != 0) return {out};
  }
  return base;
}

Scalar trace_value(const FiniteAlgebra& b, const TraceMap& l, const Vector& a) {
  return dot(b.field(), l.functional, a);
}

Scalar form(const FiniteAlgebra& b, const TraceMap& l, const Vector& u, const Vector& v) {
  if (u.size() != v.size()) throw Error(ErrorKind::Input, "form: length mismatch");
  Scalar acc = 0;
  for (std::size_t k = 0; k < u.size() / b.mu(); ++k) {
    acc += trace_value(b, l, b.multiply(component(b, u, k), component(b, v, k)));
  }
  return b.field().reduce(acc);
}

Vector form_row(const FiniteAlgebra& b, const TraceMap& l, const Vector& v) {
  const std::size_t mu = b.mu();
  Vector row(v.size());
  for (std::size_t k = 0; k < v.size() / mu; ++k) {
    // (l^T M(v_k))_j = L(v_k e_j)
    const Matrix m = b.mult_operator(component(b, v, k));
    for (std::size_t j = 0; j < mu; ++j) {
      Scalar acc = 0;
      for (std::size_t i = 0; i < mu; ++i) {
        if (sgn(l.functional[i]) != 0 && sgn(m(i, j)) != 0) acc += l.functional[i] * m(i, j);
      }
      row[k * mu + j] = b.field().reduce(acc);
    }
  }
  return row;
}

Submodule orthogonal(const FiniteAlgebra& b, const Submodule& m, const TraceMap& l) {
  const std::size_t n = m.r * b.mu();
  std::vector<Vector> rows;
  for (std::size_t k = 0; k < m.dim(); ++k) rows.push_back(form_row(b, l, m.space.vector(k)));
  return {m.r, kernel_basis(Matrix::from_rows(b.field(), n, rows))};
}

Matrix kappa(const FiniteAlgebra& b) {
  const std::size_t mu = b.mu();
  Matrix k(b.field(), 2 * mu, 2 * mu);
  const Matrix id = Matrix::identity(b.field(), mu);
  k.set_block(0, mu, id.scaled(Scalar(-1)));
  k.set_block(mu, 0, id);
  return k;
}

Vector kappa(const FiniteAlgebra& b, const Vector& v) {
  const Vector first = component(b, v, 0);
  const Vector second = component(b, v, 1);
  const Vector parts[] = {b.neg(second), first};
  return join(parts);
}

}  // namespace gobelin
