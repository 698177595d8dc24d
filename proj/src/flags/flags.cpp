#include "flags/flags.hpp"

#include <random>

namespace gobelin {

std::vector<std::size_t> Flag::dims() const {
  std::vector<std::size_t> out;
  for (const auto& t : terms) out.push_back(t.dim());
  return out;
}

Submodule flag_map(const SyzygyPair& s, const KoszulData& k, const Submodule& ideal, bool primed) {
  return primed ? colon_in_h1(k, ideal, s.tau1, s.tau2) : colon_in_h1(k, ideal, s.tau2, s.tau1);
}

Flag iterate_flag(const SyzygyPair& s, const KoszulData& k, const Submodule& start, bool primed,
                  std::size_t max_steps) {
  Flag f;
  f.terms.push_back(start);
  for (std::size_t step = 0; step < max_steps; ++step) {
    Submodule next = flag_map(s, k, f.terms.back(), primed);
    if (next == f.terms.back()) {
      f.stab = f.terms.size() - 1;
      return f;
    }
    f.terms.push_back(std::move(next));
  }
  throw Error(ErrorKind::NotStabilized, "flag did not stabilize within " + std::to_string(max_steps) + " steps");
}

FlagReport compute_flags(const SyzygyPair& s, const KoszulData& k, std::size_t max_steps) {
  const FiniteAlgebra& b = *s.algebra;
  if (max_steps == 0) max_steps = k.nu + 2;
  FlagReport fr;
  fr.L = iterate_flag(s, k, zero_module(b, 1), false, max_steps);
  fr.F = iterate_flag(s, k, full_module(b, 1), false, max_steps);
  fr.Lp = iterate_flag(s, k, zero_module(b, 1), true, max_steps);
  fr.Fp = iterate_flag(s, k, full_module(b, 1), true, max_steps);
  return fr;
}

namespace {

bool contains(const Submodule& big, const Submodule& small) { return big.space.contains(small.space); }

long d(const Submodule& m) { return static_cast<long>(m.dim()); }

std::size_t horizon(const FlagReport& fr) {
  return std::max({fr.L.stab, fr.F.stab, fr.Lp.stab, fr.Fp.stab}) + 2;
}

void structure_of(std::vector<Check>& out, const std::string& name, const Flag& f, bool ascending,
                  const Submodule& f12, std::size_t nu) {
  bool nested = true;
  bool has_f = true;
  for (std::size_t j = 0; j < f.stab; ++j) {
    nested = nested && (ascending ? contains(f.terms[j + 1], f.terms[j]) : contains(f.terms[j], f.terms[j + 1]));
  }
  for (std::size_t j = 1; j <= f.stab; ++j) has_f = has_f && contains(f.terms[j], f12);
  out.push_back(check_true(name + " is nested", nested));
  out.push_back(check_true(name + "_j contains (f1,f2) for j >= 1", has_f));
  const long proper = f.stab == 0 ? 0 : static_cast<long>(f.stab) - 1;
  out.push_back(check_true(name + ": proper inclusions after j = 1 at most nu", proper <= static_cast<long>(nu),
                           std::to_string(proper) + " > " + std::to_string(nu)));
}

bool same_flag(const Flag& a, const Flag& b) {
  if (a.stab != b.stab) return false;
  for (std::size_t j = 0; j <= a.stab; ++j) {
    if (a.terms[j] != b.terms[j]) return false;
  }
  return true;
}

Submodule random_ideal(const FiniteAlgebra& b, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(1, 3);
  std::uniform_int_distribution<int> coef(-1, 1);
  std::vector<Vector> gens;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    Vector v(b.mu());
    for (auto& x : v) x = b.field().from_int(coef(rng));
    gens.push_back(v);
  }
  return ideal(b, gens);
}

// Enlarge until T(A) is inside A, then iterate T downwards to a fixed point.
Submodule fixed_point_from(const SyzygyPair& s, const KoszulData& k, Submodule a, bool primed) {
  for (;;) {
    Submodule next = module_sum(a, flag_map(s, k, a, primed));
    if (next == a) break;
    a = std::move(next);
  }
  for (;;) {
    Submodule next = flag_map(s, k, a, primed);
    if (next == a) return a;
    a = std::move(next);
  }
}

}  // namespace

std::vector<Check> flag_structure(const SyzygyPair& s, const KoszulData& k, const FlagReport& fr) {
  const FiniteAlgebra& b = *s.algebra;
  const Submodule f12 = ideal(b, {s.f1, s.f2});
  std::vector<Check> out;
  structure_of(out, "L", fr.L, true, f12, k.nu);
  structure_of(out, "F", fr.F, false, f12, k.nu);
  structure_of(out, "L'", fr.Lp, true, f12, k.nu);
  structure_of(out, "F'", fr.Fp, false, f12, k.nu);
  out.push_back(check_true("L_inf inside F_inf", contains(fr.F.limit(), fr.L.limit())));
  out.push_back(check_true("L'_inf inside F'_inf", contains(fr.Fp.limit(), fr.Lp.limit())));
  out.push_back(check_true("L_inf is a fixed point", flag_map(s, k, fr.L.limit(), false) == fr.L.limit()));
  out.push_back(check_true("F_inf is a fixed point", flag_map(s, k, fr.F.limit(), false) == fr.F.limit()));
  out.push_back(check_true("L'_inf is a fixed point", flag_map(s, k, fr.Lp.limit(), true) == fr.Lp.limit()));
  out.push_back(check_true("F'_inf is a fixed point", flag_map(s, k, fr.Fp.limit(), true) == fr.Fp.limit()));
  const FlagReport sw = compute_flags(s.swapped(), k);
  out.push_back(check_true("swapping the syzygies exchanges L and L'", same_flag(sw.L, fr.Lp) && same_flag(sw.Lp, fr.L)));
  out.push_back(check_true("swapping the syzygies exchanges F and F'", same_flag(sw.F, fr.Fp) && same_flag(sw.Fp, fr.F)));
  return out;
}

std::vector<Check> fixed_point_extremality(const SyzygyPair& s, const KoszulData& k, const FlagReport& fr,
                                           std::size_t trials, std::uint64_t seed) {
  const FiniteAlgebra& b = *s.algebra;
  std::mt19937_64 rng(seed);
  std::vector<Check> out;
  for (std::size_t t = 0; t < trials; ++t) {
    for (bool primed : {false, true}) {
      const Flag& lo = primed ? fr.Lp : fr.L;
      const Flag& hi = primed ? fr.Fp : fr.F;
      const Submodule i = fixed_point_from(s, k, random_ideal(b, rng), primed);
      const std::string name = std::string(primed ? "primed" : "unprimed") + " fixed point " + std::to_string(t);
      out.push_back(check_true(name + " is fixed", flag_map(s, k, i, primed) == i));
      out.push_back(check_true(name + " lies between the limits", contains(i, lo.limit()) && contains(hi.limit(), i),
                               "dim " + std::to_string(i.dim()) + " outside [" + std::to_string(lo.limit().dim()) +
                                   ", " + std::to_string(hi.limit().dim()) + "]"));
    }
  }
  return out;
}

std::vector<Check> flag_gap_monotonicity(const FlagReport& fr) {
  std::vector<Check> out;
  const std::size_t n = horizon(fr);
  auto descending = [&](const Flag& f, const std::string& name) {
    for (std::size_t j = 0; j + 2 <= n; ++j) {
      const long g0 = d(f.at(j)) - d(f.at(j + 1));
      const long g1 = d(f.at(j + 1)) - d(f.at(j + 2));
      out.push_back(check_true("dim " + name + "_" + std::to_string(j) + "/" + name + "_" + std::to_string(j + 1) +
                                   " >= next gap",
                               g0 >= g1, std::to_string(g0) + " < " + std::to_string(g1)));
    }
  };
  auto ascending = [&](const Flag& f, const std::string& name) {
    for (std::size_t j = 0; j + 2 <= n; ++j) {
      const long g0 = d(f.at(j + 1)) - d(f.at(j));
      const long g1 = d(f.at(j + 2)) - d(f.at(j + 1));
      out.push_back(check_true("dim " + name + "_" + std::to_string(j + 2) + "/" + name + "_" +
                                   std::to_string(j + 1) + " <= previous gap",
                               g1 <= g0, std::to_string(g1) + " > " + std::to_string(g0)));
    }
  };
  descending(fr.F, "F");
  descending(fr.Fp, "F'");
  ascending(fr.L, "L");
  ascending(fr.Lp, "L'");
  return out;
}

std::vector<Check> phi_psi_dims(const FlagReport& fr) {
  std::vector<Check> out;
  const std::size_t n = horizon(fr);
  for (std::size_t j = 0; j <= n; ++j) {
    out.push_back(check_eq("dim F_" + std::to_string(j) + "/L_" + std::to_string(j) + " = dim F'/L'",
                           d(fr.Fp.at(j)) - d(fr.Lp.at(j)), d(fr.F.at(j)) - d(fr.L.at(j))));
  }
  for (std::size_t j = 1; j <= n; ++j) {
    const long left = d(module_intersect(fr.L.at(1), fr.Lp.at(j))) - d(module_intersect(fr.L.at(1), fr.Lp.at(j - 1)));
    const long right = d(module_intersect(fr.L.at(j), fr.Lp.at(1))) - d(module_intersect(fr.L.at(j - 1), fr.Lp.at(1)));
    out.push_back(check_eq("dim (L_1 cap L'_" + std::to_string(j) + ")/(L_1 cap L'_" + std::to_string(j - 1) +
                               ") = dim (L_j cap L'_1)/(L_{j-1} cap L'_1)",
                           right, left));
  }
  return out;
}

std::string VariantResult::verdict() const {
  if (unprimed_first && swapped) return "both";
  if (unprimed_first) return "statement";
  if (swapped) return "swapped";
  return "neither";
}

namespace {

void summarize(VariantResult& r, const std::vector<Check>& statement, const std::vector<Check>& swapped,
               const std::string& what) {
  r.unprimed_first = all_pass(statement);
  r.swapped = all_pass(swapped);
  Check c = check_true(what + " for at least one placement of the primes", r.unprimed_first || r.swapped);
  c.expected = "statement|swapped|both";
  c.actual = r.verdict();
  r.checks.push_back(c);
  for (const auto& x : statement) {
    if (!x.pass) r.details.push_back({"[statement] " + x.name, x.expected, x.actual, x.pass});
  }
  for (const auto& x : swapped) {
    if (!x.pass) r.details.push_back({"[swapped] " + x.name, x.expected, x.actual, x.pass});
  }
}

}  // namespace

VariantResult cdos_check(const SyzygyPair& s, const KoszulData& k, const FlagReport& fr, const GobelinComplex& g1,
                         const GobelinComplex& g2) {
  const FiniteAlgebra& b = *s.algebra;
  const long mu = static_cast<long>(b.mu());
  auto ann_dim = [&](const Submodule& m) { return mu - d(m); };
  auto h1 = [&](std::size_t j) { return static_cast<long>(g1.homology[j].dim()); };
  auto h2 = [&](std::size_t j) { return static_cast<long>(g2.homology[j].dim()); };
  const std::size_t J = std::min(g1.max_degree, g2.max_degree);

  VariantResult r;
  r.checks.push_back(check_eq("dim H_0(G2) = nu", static_cast<long>(k.nu), h2(0)));
  if (J >= 1) {
    const Subspace both = subspace_sum(class_module(k, s.tau1), class_module(k, s.tau2));
    r.checks.push_back(check_eq("dim H_1(G2) = dim H1 / <tau1, tau2>", static_cast<long>(2 * k.nu - both.dim()), h2(1)));
  }
  std::vector<Check> statement, swapped;
  for (std::size_t j = 1; 2 * j + 1 <= J; ++j) {
    const std::string js = std::to_string(j);
    const long f_prev = d(fr.F.at(j - 1)) - d(module_intersect(fr.F.at(j - 1), fr.Fp.at(1)));
    const long f_cur = d(fr.F.at(j)) - d(module_intersect(fr.F.at(j), fr.Fp.at(1)));
    const long ann_a = ann_dim(module_intersect(fr.Lp.at(j), fr.L.at(1))) - ann_dim(fr.L.at(1));
    const long ann_b = ann_dim(module_intersect(fr.L.at(j), fr.Lp.at(1))) - ann_dim(fr.Lp.at(1));
    for (auto [out, ann] : {std::pair{&statement, ann_a}, std::pair{&swapped, ann_b}}) {
      out->push_back(check_eq("dim H_" + std::to_string(2 * j) + "(G2) from the even sequence, j = " + js,
                              h2(2 * j - 2) - f_prev + h1(2 * j) - ann, h2(2 * j)));
      out->push_back(check_eq("dim H_" + std::to_string(2 * j + 1) + "(G2) from the odd sequence, j = " + js,
                              h2(2 * j - 1) - ann + h1(2 * j + 1) - f_cur, h2(2 * j + 1)));
    }
  }
  summarize(r, statement, swapped, "even/odd dimension identities");
  return r;
}

VariantResult dual_image_check(const SyzygyPair& s, const KoszulData& k, const FlagReport& fr,
                               const GobelinComplex& g1dual, const GobelinComplex& g2dual) {
  (void)k;
  const FiniteAlgebra& b = *s.algebra;
  const std::size_t mu = b.mu();
  const std::size_t J = std::min(g1dual.max_degree, g2dual.max_degree);
  Matrix first(b.field(), mu, 2 * mu);
  first.set_block(0, 0, Matrix::identity(b.field(), mu));
  VariantResult r;
  std::vector<Check> statement, swapped;
  for (std::size_t j = 1; 2 * j <= J; ++j) {
    const Subquotient& h1 = g1dual.homology[2 * j];
    const Subquotient& h2 = g2dual.homology[2 * j];
    Matrix restrict;
    try {
      restrict = induced_map(h2, h1, iota_matrix(b, 2 * j).transpose());
    } catch (const Error& e) {
      r.checks.push_back(check_true("restriction descends in degree " + std::to_string(2 * j), false, e.what()));
      continue;
    }
    const Subspace image = Subspace::column_space(restrict);
    auto pullback = [&](const Submodule& x) {
      return h1.classes_of(subspace_intersect(h1.cycles(), preimage(first, x.space)));
    };
    const std::string name = "image of H^" + std::to_string(2 * j) + "(G2*) in H^" + std::to_string(2 * j) + "(G1*)";
    statement.push_back(check_true(name + " = classes with a in L_j cap L'_1",
                                   image == pullback(module_intersect(fr.L.at(j), fr.Lp.at(1)))));
    swapped.push_back(check_true(name + " = classes with a in L_1 cap L'_j",
                                 image == pullback(module_intersect(fr.L.at(1), fr.Lp.at(j)))));
  }
  summarize(r, statement, swapped, "dual image identity");
  return r;
}

}  // namespace gobelin
