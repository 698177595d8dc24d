#include "koszul/koszul.hpp"

namespace gobelin {

namespace {

BMatrix row_of(const AlgebraPtr& b, const Vector& x, const Vector& y) {
  BMatrix m(b, 1, 2);
  m.set(0, 0, x);
  m.set(0, 1, y);
  return m;
}

Vector pair_of(const FiniteAlgebra& b, const Vector& x, const Vector& y) {
  const Vector parts[] = {x, y};
  (void)b;
  return join(parts);
}

Matrix gram(const FiniteAlgebra& b, const TraceMap& l, const Subquotient& h) {
  const auto basis = h.coset_basis();
  Matrix g(b.field(), basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) g(i, j) = form(b, l, basis[i], kappa(b, basis[j]));
  }
  return g;
}

Subspace perp_in(const Matrix& gram, const Subspace& classes) {
  // x with x^T G y = 0 for every y in the subspace.
  return kernel_basis((gram * classes.basis()).transpose());
}

// Block selection matrices on B^2.
Matrix slot(const FieldSpec& f, std::size_t mu, std::size_t k) {
  Matrix m(f, 2 * mu, mu);
  m.set_block(k * mu, 0, Matrix::identity(f, mu));
  return m;
}

Matrix project(const FieldSpec& f, std::size_t mu, std::size_t k) { return slot(f, mu, k).transpose(); }

std::size_t codim(const FiniteAlgebra& b, const Submodule& i) { return b.mu() - i.dim(); }

}  // namespace

SyzygyPair make_syzygy_pair(const AlgebraPtr& b, const Vector& f1, const Vector& f2, const Vector& c11,
                            const Vector& c12, const Vector& c21, const Vector& c22) {
  SyzygyPair s{b, f1, f2, pair_of(*b, c11, c12), pair_of(*b, c21, c22)};
  return s;
}

void check_syzygies(const SyzygyPair& s) {
  const FiniteAlgebra& b = *s.algebra;
  const Vector r1 = b.add(b.multiply(s.c11(), s.f1), b.multiply(s.c12(), s.f2));
  if (!is_zero(r1)) throw Error(ErrorKind::SyzygyViolation, "c11*f1 + c12*f2 = " + b.format(r1) + ", not 0");
  const Vector r2 = b.add(b.multiply(s.c21(), s.f1), b.multiply(s.c22(), s.f2));
  if (!is_zero(r2)) throw Error(ErrorKind::SyzygyViolation, "c21*f1 + c22*f2 = " + b.format(r2) + ", not 0");
}

KoszulData koszul(const AlgebraPtr& bp, const TraceMap& trace, const Vector& f1, const Vector& f2) {
  const FiniteAlgebra& b = *bp;
  if (b.is_invertible(f1)) throw Error(ErrorKind::UnitElement, "f1 = " + b.format(f1) + " is a unit");
  if (b.is_invertible(f2)) throw Error(ErrorKind::UnitElement, "f2 = " + b.format(f2) + " is a unit");
  KoszulData k;
  k.algebra = bp;
  k.trace = trace;
  k.f1 = f1;
  k.f2 = f2;
  const BMatrix d1 = row_of(bp, f1, f2);
  BMatrix d2(bp, 2, 1);
  d2.set(0, 0, b.neg(f2));
  d2.set(1, 0, f1);
  k.complex = ScalarComplex::from_bmatrices(Direction::Chain, {1, 2, 1}, {d1, d2});
  k.dual = ScalarComplex::from_bmatrices(Direction::Cochain, {1, 2, 1}, {d1.transpose(), d2.transpose()});
  k.complex.check();
  k.dual.check();
  k.h0 = k.complex.homology_at(0);
  k.h1 = k.complex.homology_at(1);
  k.h2 = k.complex.homology_at(2);
  k.co0 = k.dual.homology_at(0);
  k.co1 = k.dual.homology_at(1);
  k.co2 = k.dual.homology_at(2);
  k.nu = codim(b, ideal(b, {f1, f2}));
  k.nu1 = codim(b, ideal(b, {f1}));
  k.nu2 = codim(b, ideal(b, {f2}));
  k.gram_h1 = gram(b, trace, k.h1);
  k.gram_co1 = gram(b, trace, k.co1);
  return k;
}

Vector h1_action(const KoszulData& k, const Vector& a, const Vector& cls) {
  return k.h1.class_coords(module_scale(*k.algebra, a, k.h1.representative(cls)));
}

Subspace class_module(const KoszulData& k, const Vector& tau) {
  const Submodule m = submodule_generated(*k.algebra, 2, std::span<const Vector>(&tau, 1));
  return k.h1.classes_of(m.space);
}

std::size_t class_module_dim(const KoszulData& k, const Vector& tau) { return class_module(k, tau).dim(); }

Submodule colon_in_h1(const KoszulData& k, const Submodule& id, const Vector& tauA, const Vector& tauB) {
  const FiniteAlgebra& b = *k.algebra;
  if (!k.h1.is_cycle(tauA)) throw Error(ErrorKind::NotACycle, "colon_in_h1: first syzygy is not a cycle");
  if (!k.h1.is_cycle(tauB)) throw Error(ErrorKind::NotACycle, "colon_in_h1: second syzygy is not a cycle");
  const Subspace target = subspace_sum(ideal_times(b, id, tauA).space, k.h1.boundaries());
  return {1, preimage(action_on(b, tauB), target)};
}

Subspace h1_perp(const KoszulData& k, const Subspace& classes) { return perp_in(k.gram_h1, classes); }

Subspace co1_perp(const KoszulData& k, const Subspace& classes) { return perp_in(k.gram_co1, classes); }

Matrix kappa_iso(const KoszulData& k) { return induced_map(k.h1, k.co1, kappa(*k.algebra)); }

std::vector<Check> koszul_sequences_check(const KoszulData& k) {
  const FiniteAlgebra& b = *k.algebra;
  const FieldSpec& f = b.field();
  const std::size_t mu = b.mu();
  std::vector<Check> out;
  const Submodule i1 = ideal(b, {k.f1});
  const Submodule i2 = ideal(b, {k.f2});
  const Submodule ann1 = annihilator(b, i1);
  const Submodule ann2 = annihilator(b, i2);

  Subquotient left2(ann2.space, ideal_times(b, ann2, k.f1).space);
  Subquotient right1(colon(b, i2, k.f1).space, i2.space);
  check_short_exact(out, "Ann(f2)/f1Ann(f2) -> H1 -> (f2:f1)/(f2)", left2, k.h1, right1, slot(f, mu, 1),
                    project(f, mu, 0));
  out.push_back(check_eq("dim Ann(f2)/f1Ann(f2) + dim (f2:f1)/(f2) = dim H1", static_cast<long>(k.h1.dim()),
                         static_cast<long>(left2.dim() + right1.dim())));

  Subquotient left1(ann1.space, ideal_times(b, ann1, k.f2).space);
  Subquotient right2(colon(b, i1, k.f2).space, i1.space);
  check_short_exact(out, "Ann(f1)/f2Ann(f1) -> H1 -> (f1:f2)/(f1)", left1, k.h1, right2, slot(f, mu, 0),
                    project(f, mu, 1));
  out.push_back(check_eq("dim Ann(f1)/f2Ann(f1) + dim (f1:f2)/(f1) = dim H1", static_cast<long>(k.h1.dim()),
                         static_cast<long>(left1.dim() + right2.dim())));
  return out;
}

std::vector<Check> dimension_table(const KoszulData& k) {
  const FiniteAlgebra& b = *k.algebra;
  const long mu = static_cast<long>(b.mu());
  const long nu = static_cast<long>(k.nu), nu1 = static_cast<long>(k.nu1), nu2 = static_cast<long>(k.nu2);
  const Submodule i1 = ideal(b, {k.f1});
  const Submodule i2 = ideal(b, {k.f2});
  const Submodule i12 = ideal(b, {k.f1, k.f2});
  const Submodule ann1 = annihilator(b, i1);
  const Submodule ann2 = annihilator(b, i2);
  const Submodule ann12 = annihilator(b, i12);
  const Submodule meet = module_intersect(i1, i2);
  auto d = [](const Submodule& m) { return static_cast<long>(m.dim()); };

  std::vector<Check> out;
  out.push_back(check_eq("dim Ann(f1) = nu1", nu1, d(ann1)));
  out.push_back(check_eq("dim Ann(f2) = nu2", nu2, d(ann2)));
  out.push_back(check_eq("dim Ann(f1,f2) = nu", nu, d(ann12)));
  out.push_back(check_true("Ann(f1) cap Ann(f2) = Ann(f1,f2)", module_intersect(ann1, ann2) == ann12));
  out.push_back(check_eq("codim (f1) cap (f2) = nu1 + nu2 - nu", nu1 + nu2 - nu, mu - d(meet)));
  out.push_back(check_true("Ann((f1) cap (f2)) = Ann(f1) + Ann(f2)",
                           annihilator(b, meet) == module_sum(ann1, ann2)));
  out.push_back(check_eq("dim (f2:f1) = mu - nu2 + nu", mu - nu2 + nu, d(colon(b, i2, k.f1))));
  out.push_back(check_eq("dim (f1:f2) = mu - nu1 + nu", mu - nu1 + nu, d(colon(b, i1, k.f2))));
  out.push_back(check_eq("dim f1 Ann(f2) = nu2 - nu", nu2 - nu, d(ideal_times(b, ann2, k.f1))));
  out.push_back(check_eq("dim f2 Ann(f1) = nu1 - nu", nu1 - nu, d(ideal_times(b, ann1, k.f2))));
  out.push_back(check_eq("dim Ann(f2)/f1 Ann(f2) = nu", nu, d(ann2) - d(ideal_times(b, ann2, k.f1))));
  out.push_back(check_eq("dim Ann(f1)/f2 Ann(f1) = nu", nu, d(ann1) - d(ideal_times(b, ann1, k.f2))));
  out.push_back(check_eq("dim (f2:f1)/(f2) = nu", nu, d(colon(b, i2, k.f1)) - d(i2)));
  out.push_back(check_eq("dim (f1:f2)/(f1) = nu", nu, d(colon(b, i1, k.f2)) - d(i1)));
  return out;
}

std::vector<Check> koszul_invariants(const KoszulData& k) {
  const FiniteAlgebra& b = *k.algebra;
  const long mu = static_cast<long>(b.mu());
  const long nu = static_cast<long>(k.nu);
  std::vector<Check> out;
  out.push_back(check_eq("dim H0 = nu", nu, static_cast<long>(k.h0.dim())));
  out.push_back(check_eq("dim H1 = 2 nu", 2 * nu, static_cast<long>(k.h1.dim())));
  out.push_back(check_eq("dim H2 = nu", nu, static_cast<long>(k.h2.dim())));
  out.push_back(check_eq("dim H^0 = nu", nu, static_cast<long>(k.co0.dim())));
  out.push_back(check_eq("dim H^1 = 2 nu", 2 * nu, static_cast<long>(k.co1.dim())));
  out.push_back(check_eq("dim H^2 = nu", nu, static_cast<long>(k.co2.dim())));
  out.push_back(check_eq("dim <(f1,f2)> = mu - nu", mu - nu, static_cast<long>(k.h1.boundaries().dim())));
  out.push_back(check_eq("dim <(f1,f2)>^perp = mu + nu", mu + nu, static_cast<long>(k.h1.cycles().dim())));
  out.push_back(check_eq("rank of the form on H1", 2 * nu, static_cast<long>(rank(k.gram_h1))));
  out.push_back(check_eq("rank of the form on H^1", 2 * nu, static_cast<long>(rank(k.gram_co1))));
  const Matrix ki = kappa_iso(k);
  out.push_back(check_eq("kappa: H1 -> H^1 is invertible", 2 * nu, static_cast<long>(rank(ki))));
  out.push_back(check_true("kappa preserves the forms", ki.transpose() * k.gram_co1 * ki == k.gram_h1));
  const Matrix minus = induced_map(k.h1, k.h1, Matrix::identity(b.field(), 2 * b.mu()).scaled(Scalar(-1)));
  out.push_back(check_true("kappa twice is -1 on H1", induced_map(k.co1, k.h1, kappa(b)) * ki == minus));
  return out;
}

}  // namespace gobelin
