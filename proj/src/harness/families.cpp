#include "harness/families.hpp"

#include <random>

namespace gobelin {

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {"g_multiple", "one_zero", "zero_syzygies"};
  return names;
}

namespace {

struct Base {
  QuotientRing ring;
  std::vector<std::string> vars;
  FieldSpec field;
  Polynomial poly(const std::string& text) const { return parse_poly(text, vars, field); }
  std::string text(const Polynomial& p) const { return ring.normal_form(p).to_string(vars); }
};

Base base_of(const Scenario& sc) {
  QuotientPresentation p;
  p.field = sc.field;
  p.variables = sc.variables;
  for (const auto& r : sc.relations) p.generators.push_back(parse_poly(r, sc.variables, sc.field));
  return Base{QuotientRing::build(p), sc.variables, sc.field};
}

std::string dims_csv(std::size_t J, long nu, long slope) {
  std::vector<std::size_t> d;
  for (std::size_t j = 0; j <= J; ++j) d.push_back(static_cast<std::size_t>(nu + static_cast<long>(j) * slope));
  return join_dims(d);
}

Scenario with_syzygies(const Scenario& base, const std::string& name, const std::string (&c)[4]) {
  Scenario sc = base;
  sc.name = name;
  sc.annotations.clear();
  for (int i = 0; i < 4; ++i) sc.data[2 + i] = c[i];
  return sc;
}

Polynomial random_lift(const Base& b, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-2, 2);
  Polynomial p(b.field, b.vars.size());
  for (const auto& m : b.ring.standard_monomials()) {
    const int c = coef(rng);
    if (c != 0) p.add_term(m, b.field.from_int(c));
  }
  return p;
}

}  // namespace

std::vector<Scenario> family(const std::string& name, const FamilyParams& params) {
  const Scenario& base = params.base;
  const Base b = base_of(base);
  const Polynomial f1 = b.poly(base.data[0]);
  const Polynomial f2 = b.poly(base.data[1]);
  const std::size_t J = base.max_degree;
  std::vector<Scenario> out;

  if (name == "zero_syzygies") {
    const std::string zero[4] = {"0", "0", "0", "0"};
    Scenario sc = with_syzygies(base, base.name + "_zero", zero);
    const long nu = static_cast<long>(instantiate(sc).koszul.nu);
    sc.annotations = {{"family", "zero_syzygies"}, {"expect_g2", dims_csv(J, nu, nu)}};
    out.push_back(sc);
    std::mt19937_64 rng(base.seed);
    for (std::size_t i = 0; i < params.homologous; ++i) {
      const Polynomial b1 = random_lift(b, rng);
      const Polynomial b2 = random_lift(b, rng);
      const std::string c[4] = {b.text(-(b1 * f2)), b.text(b1 * f1), b.text(-(b2 * f2)), b.text(b2 * f1)};
      Scenario h = with_syzygies(base, base.name + "_homologous" + std::to_string(i + 1), c);
      h.annotations = {{"family", "homologous"}, {"expect_g2", dims_csv(J, nu, nu)}};
      instantiate(h);
      out.push_back(h);
    }
    return out;
  }
  if (name != "one_zero" && name != "g_multiple") throw Error(ErrorKind::Input, "unknown family '" + name + "'");
  if (params.tau2[0].empty() || params.tau2[1].empty()) throw Error(ErrorKind::Input, name + " needs tau2");
  const Polynomial t0 = b.poly(params.tau2[0]);
  const Polynomial t1 = b.poly(params.tau2[1]);

  if (name == "one_zero") {
    const std::string c[4] = {"0", "0", b.text(t0), b.text(t1)};
    Scenario sc = with_syzygies(base, base.name + "_one_zero", c);
    const Instance in = instantiate(sc);
    const long nu = static_cast<long>(in.koszul.nu);
    const long tau = static_cast<long>(class_module_dim(in.koszul, in.pair.tau2));
    sc.annotations = {{"family", "one_zero"}, {"expect_g2", dims_csv(J, nu, nu - tau)}};
    out.push_back(sc);
    return out;
  }

  if (params.g.empty()) throw Error(ErrorKind::Input, "g_multiple needs g");
  const Polynomial g = b.poly(params.g);
  const std::string c[4] = {b.text(g * t0), b.text(g * t1), b.text(t0), b.text(t1)};
  Scenario sc = with_syzygies(base, base.name + "_g_multiple", c);
  const Instance in = instantiate(sc);
  const FiniteAlgebra& alg = in.algebra();
  const long nu = static_cast<long>(in.koszul.nu);
  const long tau2 = static_cast<long>(class_module_dim(in.koszul, in.pair.tau2));
  sc.annotations = {{"family", "g_multiple"}, {"g", b.text(g)}, {"expect_g2", dims_csv(J, nu, nu - tau2)}};
  const Vector gv = b.ring.element(g);
  if (!alg.is_invertible(gv)) {
    const Submodule l1 = colon_in_h1(in.koszul, zero_module(alg, 1), in.pair.tau2, in.pair.tau1);
    Vector p = alg.unit();
    for (std::size_t i = 0; i <= alg.mu(); ++i) {
      if (l1.space.contains(p)) {
        sc.annotations.emplace_back("expect_stab", std::to_string(i));
        break;
      }
      p = alg.multiply(p, gv);
    }
  }
  out.push_back(sc);
  return out;
}

}  // namespace gobelin
