#include "harness/suites.hpp"

#include <random>
#include <sstream>

namespace gobelin {

Computed compute_all(const Instance& in) {
  Computed c;
  const std::size_t J = in.scenario.max_degree;
  c.g1 = build_g1(in.pair, J);
  c.g2 = build_g2(in.pair, J);
  c.g1_dual = dual_of(c.g1);
  c.g2_dual = dual_of(c.g2);
  c.flags = compute_flags(in.pair, in.koszul);
  return c;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"algebra", "koszul", "g1", "les", "cdos", "flags", "dual"};
  return names;
}

namespace {

void append(std::vector<Check>& out, const std::vector<Check>& more) { out.insert(out.end(), more.begin(), more.end()); }

std::vector<Check> complex_checks(const GobelinComplex& g) {
  const long bad = g.complex.first_broken();
  return {check_true(std::string("d o d = 0 on ") + to_string(g.which) + " through degree " +
                         std::to_string(g.max_degree + 1),
                     bad < 0, "composite " + std::to_string(bad) + " nonzero")};
}

Submodule random_ideal(const FiniteAlgebra& b, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(1, 3);
  std::uniform_int_distribution<int> coef(-1, 1);
  std::vector<Vector> gens;
  for (int i = count(rng); i > 0; --i) {
    Vector v(b.mu());
    for (auto& x : v) x = b.field().from_int(coef(rng));
    gens.push_back(v);
  }
  return ideal(b, gens);
}

std::vector<Check> algebra_suite(const Instance& in) {
  const FiniteAlgebra& b = in.algebra();
  std::vector<Check> out;
  const SocleReport sr = socle_and_checks(b);
  out.push_back(check_true("algebra is local", sr.is_local));
  out.push_back(check_eq("dim socle", 1, static_cast<long>(sr.socle.dim())));
  append(out, dimension_table(in.koszul));

  std::mt19937_64 rng(in.scenario.seed);
  const TraceMap other = alternative_trace(b, in.trace, in.scenario.seed + 1);
  out.push_back(check_true("second trace differs from the first", other.functional != in.trace.functional));
  bool dims = true, traces = true, ann = true, twice = true;
  for (int t = 0; t < 50; ++t) {
    const Submodule i = random_ideal(b, rng);
    const Submodule a = annihilator(b, i);
    const Submodule o1 = orthogonal(b, i, in.trace);
    dims = dims && i.dim() + a.dim() == b.mu();
    traces = traces && o1 == orthogonal(b, i, other);
    ann = ann && o1 == a;
    twice = twice && orthogonal(b, o1, in.trace) == i;
  }
  out.push_back(check_true("dim I + dim Ann(I) = mu for 50 random ideals", dims));
  out.push_back(check_true("orthogonal(I) is the same for two traces", traces));
  out.push_back(check_true("orthogonal(I) = Ann(I)", ann));
  out.push_back(check_true("orthogonal twice is the identity on ideals", twice));

  std::uniform_int_distribution<int> coef(-2, 2);
  bool iso = true;
  for (int t = 0; t < 20; ++t) {
    Vector u(2 * b.mu()), v(2 * b.mu());
    for (auto& x : u) x = b.field().from_int(coef(rng));
    for (auto& x : v) x = b.field().from_int(coef(rng));
    iso = iso && form(b, in.trace, u, v) == form(b, in.trace, kappa(b, u), kappa(b, v));
  }
  out.push_back(check_true("kappa is an isometry of B^2", iso));
  return out;
}

std::vector<Check> koszul_suite(const Instance& in) {
  std::vector<Check> out = koszul_invariants(in.koszul);
  append(out, koszul_sequences_check(in.koszul));
  const auto e = in.koszul.complex.euler_characteristics();
  out.push_back(check_eq("Koszul Euler characteristic", e.first, e.second));
  return out;
}

std::vector<Check> g1_suite(const Instance& in, const Computed& c) {
  std::vector<Check> out = complex_checks(c.g1);
  append(out, complex_checks(c.g1_dual));
  append(out, g1_closed_forms(in.pair, in.koszul, c.g1, c.g1_dual));
  for (std::size_t j = 1; 2 * j + 1 <= c.g1.max_degree; ++j) {
    out.push_back(check_eq("dim H_" + std::to_string(2 * j) + "(G1) = dim H_" + std::to_string(2 * j + 1) + "(G1)",
                           static_cast<long>(c.g1.homology[2 * j].dim()),
                           static_cast<long>(c.g1.homology[2 * j + 1].dim())));
  }
  return out;
}

std::string csv(const std::vector<std::size_t>& v) { return join_dims(v); }

}  // namespace

std::vector<Check> golden_differentials(const Instance& in, const Computed& c) {
  const FiniteAlgebra& b = in.algebra();
  const SyzygyPair& s = in.pair;
  const Vector z = b.zero();
  const Vector nf2 = b.neg(s.f2), nc12 = b.neg(s.c12()), nc22 = b.neg(s.c22());
  const std::vector<std::vector<std::vector<Vector>>> printed = {
      {{s.f1, s.f2}},
      {{nf2, s.c11(), s.c21()}, {s.f1, s.c12(), s.c22()}},
      {{nc12, nc22, s.c11(), s.c21()}, {s.f1, z, s.f2, z}, {z, s.f1, z, s.f2}},
      {{nf2, z, s.c11(), s.c21(), z}, {z, nf2, z, s.c11(), s.c21()}, {s.f1, z, s.c12(), s.c22(), z},
       {z, s.f1, z, s.c12(), s.c22()}},
  };
  std::vector<Check> out;
  for (std::size_t i = 0; i < printed.size() && i < c.g2.differentials.size(); ++i) {
    const BMatrix& m = c.g2.differentials[i];
    bool same = m.rows() == printed[i].size() && m.cols() == printed[i][0].size();
    for (std::size_t r = 0; same && r < m.rows(); ++r) {
      for (std::size_t col = 0; col < m.cols(); ++col) same = same && m.at(r, col) == printed[i][r][col];
    }
    out.push_back(check_true("d_" + std::to_string(i + 1) + " of G2 equals the printed matrix", same));
  }
  return out;
}

std::vector<Check> stable_difference(const Computed& c) {
  const auto d = c.g2.dims();
  const std::size_t J = c.g2.max_degree;
  const FlagReport& fr = c.flags;
  const std::size_t stab = std::max({fr.L.stab, fr.F.stab, fr.Lp.stab, fr.Fp.stab});
  std::vector<Check> out;
  for (std::size_t parity = 0; parity < 2; ++parity) {
    long first = 0;
    bool have = false;
    std::vector<long> diffs;
    for (std::size_t j = 2 * stab; j + 2 <= J; ++j) {
      if (j % 2 != parity) continue;
      const long diff = static_cast<long>(d[j + 2]) - static_cast<long>(d[j]);
      if (!have) first = diff;
      have = true;
      diffs.push_back(diff);
    }
    bool constant = true;
    std::ostringstream os;
    for (std::size_t i = 0; i < diffs.size(); ++i) {
      constant = constant && diffs[i] == first;
      os << (i ? "," : "") << diffs[i];
    }
    Check ch = check_true(std::string("dim H_{j+2}(G2) - dim H_j(G2) constant for ") +
                              (parity == 0 ? "even" : "odd") + " j >= " + std::to_string(2 * stab),
                          constant, os.str());
    if (constant) ch.actual = diffs.empty() ? "no degrees in range" : "constant " + std::to_string(first);
    out.push_back(ch);
  }
  return out;
}

namespace {

std::vector<std::size_t> parse_csv(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stoul(item));
  }
  return out;
}

long min_power_in(const FiniteAlgebra& b, const Vector& g, const Submodule& ideal, std::size_t bound) {
  Vector p = b.unit();
  for (std::size_t i = 0; i <= bound; ++i) {
    if (ideal.space.contains(p)) return static_cast<long>(i);
    p = b.multiply(p, g);
  }
  return -1;
}

}  // namespace

std::vector<Check> family_checks(const Instance& in, const Computed& c) {
  const FiniteAlgebra& b = in.algebra();
  const Scenario& sc = in.scenario;
  const FlagReport& fr = c.flags;
  const std::string family = sc.annotation("family");
  const auto dims = c.g2.dims();
  const long nu = static_cast<long>(in.koszul.nu);
  std::vector<Check> out;
  auto expect_dims = [&](const std::string& label, auto formula) {
    std::vector<std::size_t> want;
    for (std::size_t j = 0; j < dims.size(); ++j) want.push_back(static_cast<std::size_t>(formula(static_cast<long>(j))));
    Check ch{label, csv(want), csv(dims), want == dims};
    out.push_back(ch);
  };
  const Submodule all = full_module(b, 1);
  if (family == "zero_syzygies" || family == "homologous") {
    expect_dims("dim H_j(G2) = (j+1) nu", [&](long j) { return (j + 1) * nu; });
    if (family == "zero_syzygies") {
      out.push_back(check_true("L_1 = L_inf = F_inf = B", fr.L.at(1) == all && fr.L.limit() == all && fr.F.limit() == all));
      out.push_back(check_true("primed flags equal the unprimed ones", fr.Lp.dims() == fr.L.dims() && fr.Fp.dims() == fr.F.dims()));
    }
  } else if (family == "one_zero") {
    const long tau = static_cast<long>(class_module_dim(in.koszul, in.pair.tau2));
    expect_dims("dim H_j(G2) = nu + j (nu - tau)", [&](long j) { return nu + j * (nu - tau); });
    const Submodule ann_tau = colon_in_h1(in.koszul, zero_module(b, 1), in.pair.tau1, in.pair.tau2);
    out.push_back(check_true("L_1 = ... = F_0 = B", fr.L.at(1) == all && fr.L.limit() == all && fr.F.limit() == all &&
                                                        fr.F.at(1) == all));
    out.push_back(check_true("L'_1 = ... = F'_1 = (0 : tau2)", fr.Lp.at(1) == ann_tau && fr.Lp.limit() == ann_tau &&
                                                                   fr.Fp.limit() == ann_tau && fr.Fp.at(1) == ann_tau));
  } else if (family == "g_multiple") {
    const Vector g = in.ring.element(parse_poly(sc.annotation("g"), sc.variables, sc.field));
    const long tau2 = static_cast<long>(class_module_dim(in.koszul, in.pair.tau2));
    expect_dims("dim H_j(G2) = nu + j (nu - tau2)", [&](long j) { return nu + j * (nu - tau2); });
    if (b.is_invertible(g)) {
      out.push_back(check_true("flags are identical for a unit multiple",
                               fr.L.dims() == fr.Lp.dims() && fr.F.dims() == fr.Fp.dims() &&
                                   fr.L.limit() == fr.Lp.limit() && fr.F.limit() == fr.Fp.limit()));
    } else {
      const std::size_t horizon = std::max({fr.L.stab, fr.Fp.stab}) + 2;
      bool l_ok = true, fp_ok = true;
      for (std::size_t j = 1; j <= horizon; ++j) {
        l_ok = l_ok && fr.L.at(j) == colon(b, fr.L.at(1), b.power(g, j - 1));
        fp_ok = fp_ok && fr.Fp.at(j) == module_sum(ideal(b, {b.power(g, j)}), fr.Lp.at(1));
      }
      out.push_back(check_true("L_j = (L_1 : g^{j-1})", l_ok));
      out.push_back(check_true("F'_j = <g^j> + L'_1", fp_ok));
      const long want = min_power_in(b, g, fr.L.at(1), b.mu());
      out.push_back(check_eq("L stabilizes at min{i : g^i in L_1}", want, static_cast<long>(fr.L.stab)));
      out.push_back(check_eq("F' stabilizes at min{i : g^i in L_1}", want, static_cast<long>(fr.Fp.stab)));
    }
  } else if (!family.empty()) {
    out.push_back(check_true("known family", false, "unknown family '" + family + "'"));
  }
  const std::string want_g2 = sc.annotation("expect_g2");
  if (!want_g2.empty()) {
    auto want = parse_csv(want_g2);
    auto got = dims;
    if (want.size() > got.size()) want.resize(got.size());
    got.resize(want.size());
    out.push_back({"annotated dims of H_j(G2)", csv(want), csv(got), want == got});
  }
  const std::string want_stab = sc.annotation("expect_stab");
  if (!want_stab.empty()) {
    const long want = std::stol(want_stab);
    out.push_back(check_eq("annotated stabilization index of L", want, static_cast<long>(fr.L.stab)));
    out.push_back(check_eq("annotated stabilization index of F'", want, static_cast<long>(fr.Fp.stab)));
  }
  const std::string want_g1 = sc.annotation("expect_g1");
  if (!want_g1.empty()) {
    auto want = parse_csv(want_g1);
    auto got = c.g1.dims();
    if (want.size() > got.size()) want.resize(got.size());
    got.resize(want.size());
    out.push_back({"annotated dims of H_j(G1)", csv(want), csv(got), want == got});
  }
  return out;
}

SuiteVerdict run_suite(const Instance& in, const Computed& c, const std::string& suite) {
  SuiteVerdict v;
  v.name = suite;
  if (suite == "algebra") {
    v.checks = algebra_suite(in);
  } else if (suite == "koszul") {
    v.checks = koszul_suite(in);
  } else if (suite == "g1") {
    v.checks = g1_suite(in, c);
  } else if (suite == "les") {
    v.checks = complex_checks(c.g2);
    append(v.checks, complex_checks(c.g2_dual));
    append(v.checks, golden_differentials(in, c));
    append(v.checks, les_maps(in.pair, c.g1, c.g2).checks);
  } else if (suite == "cdos") {
    const VariantResult r = cdos_check(in.pair, in.koszul, c.flags, c.g1, c.g2);
    v.checks = r.checks;
    append(v.checks, stable_difference(c));
    v.notes.emplace_back("cdos_variant", r.verdict());
    for (const auto& d : r.details) v.notes.emplace_back(d.name, "expected " + d.expected + ", got " + d.actual);
  } else if (suite == "flags") {
    v.checks = flag_structure(in.pair, in.koszul, c.flags);
    append(v.checks, fixed_point_extremality(in.pair, in.koszul, c.flags, 10, in.scenario.seed));
    append(v.checks, flag_gap_monotonicity(c.flags));
    append(v.checks, phi_psi_dims(c.flags));
  } else if (suite == "dual") {
    v.checks.push_back({"dims of H^j(G1*) = dims of H_j(G1)", csv(c.g1.dims()), csv(c.g1_dual.dims()),
                        c.g1.dims() == c.g1_dual.dims()});
    v.checks.push_back({"dims of H^j(G2*) = dims of H_j(G2)", csv(c.g2.dims()), csv(c.g2_dual.dims()),
                        c.g2.dims() == c.g2_dual.dims()});
    const VariantResult r = dual_image_check(in.pair, in.koszul, c.flags, c.g1_dual, c.g2_dual);
    append(v.checks, r.checks);
    v.notes.emplace_back("dual_image_variant", r.verdict());
    for (const auto& d : r.details) v.notes.emplace_back(d.name, "expected " + d.expected + ", got " + d.actual);
  } else if (suite == "expect") {
    v.checks = family_checks(in, c);
  } else {
    throw Error(ErrorKind::Input, "unknown suite '" + suite + "'");
  }
  v.pass = all_pass(v.checks);
  return v;
}

}  // namespace gobelin
