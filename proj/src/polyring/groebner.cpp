#include "polyring/groebner.hpp"

#include <algorithm>
#include <tuple>

namespace gobelin {

namespace {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  const Monomial& lf = f.leading_monomial(order);
  const Monomial& lg = g.leading_monomial(order);
  const Monomial l = monomial_lcm(lf, lg);
  return f.shifted(monomial_quotient(l, lf), 1) - g.shifted(monomial_quotient(l, lg), 1);
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& g, const MonomialOrder& order) {
  Polynomial rem(f.field(), f.nvars());
  Polynomial p = f;
  std::vector<Monomial> leads;
  leads.reserve(g.size());
  for (const auto& h : g) leads.push_back(h.leading_monomial(order));
  while (!p.is_zero()) {
    const Monomial lm = p.leading_monomial(order);
    const Scalar lc = p.coefficient(lm);
    std::size_t k = 0;
    while (k < g.size() && !divides(leads[k], lm)) ++k;
    if (k < g.size()) {
      p = p - g[k].shifted(monomial_quotient(lm, leads[k]), lc);
    } else {
      rem.add_term(lm, lc);
      p.add_term(lm, f.field().neg(lc));
    }
  }
  return rem;
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
  std::vector<Polynomial> g;
  for (const auto& p : gens) {
    if (!p.is_zero()) g.push_back(p.monic(order));
  }
  if (g.empty()) return g;

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < g.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }

  auto pair_lcm = [&](const std::pair<std::size_t, std::size_t>& pr) {
    return monomial_lcm(g[pr.first].leading_monomial(order), g[pr.second].leading_monomial(order));
  };

  while (!pairs.empty()) {
    // Normal selection: smallest lcm, ties broken by (j, i).
    std::size_t best = 0;
    Monomial best_lcm = pair_lcm(pairs[0]);
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      Monomial l = pair_lcm(pairs[k]);
      const bool smaller = order.less(l, best_lcm) ||
                           (l == best_lcm && std::tie(pairs[k].second, pairs[k].first) <
                                                 std::tie(pairs[best].second, pairs[best].first));
      if (smaller) {
        best = k;
        best_lcm = std::move(l);
      }
    }
    const auto [i, j] = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

    if (coprime(g[i].leading_monomial(order), g[j].leading_monomial(order))) continue;
    Polynomial r = normal_form(s_polynomial(g[i], g[j], order), g, order);
    if (r.is_zero()) continue;
    g.push_back(r.monic(order));
    const std::size_t n = g.size() - 1;
    for (std::size_t k = 0; k < n; ++k) pairs.emplace_back(k, n);
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<Polynomial> minimal;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const Monomial& lk = g[k].leading_monomial(order);
    bool redundant = false;
    for (std::size_t m = 0; m < g.size() && !redundant; ++m) {
      if (m == k) continue;
      const Monomial& lm = g[m].leading_monomial(order);
      if (divides(lm, lk) && (lm != lk || m < k)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[k]);
  }

  // Interreduce the tails.
  std::vector<Polynomial> reduced;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Polynomial> others;
    for (std::size_t m = 0; m < minimal.size(); ++m) {
      if (m != k) others.push_back(minimal[m]);
    }
    reduced.push_back(normal_form(minimal[k], others, order).monic(order));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.less(a.leading_monomial(order), b.leading_monomial(order));
  });
  return reduced;
}

QuotientRing QuotientRing::build(const QuotientPresentation& p) {
  QuotientRing q;
  q.pres_ = p;
  const std::size_t n = p.variables.size();
  for (const auto& gen : p.generators) {
    require_same_field(gen.field(), p.field, "quotient presentation");
    if (gen.nvars() != n) throw Error(ErrorKind::Input, "relation has the wrong number of variables");
  }
  q.gb_ = buchberger(p.generators, p.order);

  for (const auto& g : q.gb_) {
    if (total_degree(g.leading_monomial(p.order)) == 0) {
      throw Error(ErrorKind::Input, "relations generate the unit ideal");
    }
  }

  // Every variable needs a pure power among the leading monomials.
  std::vector<unsigned> bound(n, 0);
  for (const auto& g : q.gb_) {
    const Monomial& lm = g.leading_monomial(p.order);
    std::size_t support = 0;
    std::size_t var = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (lm[i] != 0) {
        ++support;
        var = i;
      }
    }
    if (support == 1 && (bound[var] == 0 || lm[var] < bound[var])) bound[var] = lm[var];
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (bound[i] == 0) {
      throw Error(ErrorKind::NotZeroDimensional,
                  "no pure power of " + p.variables[i] + " among the leading terms; the quotient is infinite");
    }
  }

  std::vector<Monomial> leads;
  for (const auto& g : q.gb_) leads.push_back(g.leading_monomial(p.order));
  Monomial m(n, 0);
  for (;;) {
    bool standard = true;
    for (const auto& l : leads) {
      if (divides(l, m)) {
        standard = false;
        break;
      }
    }
    if (standard) q.basis_.push_back(m);
    std::size_t i = 0;
    while (i < n && ++m[i] == bound[i]) m[i++] = 0;
    if (i == n) break;
  }
  std::sort(q.basis_.begin(), q.basis_.end(),
            [&](const Monomial& a, const Monomial& b) { return p.order.less(a, b); });

  const std::size_t mu = q.basis_.size();
  std::vector<std::string> labels;
  for (const auto& b : q.basis_) labels.push_back(Polynomial::term(p.field, b, 1).to_string(p.variables));
  std::vector<Matrix> ops;
  for (std::size_t i = 0; i < mu; ++i) {
    Matrix op(p.field, mu, mu);
    const Polynomial bi = Polynomial::term(p.field, q.basis_[i], 1);
    for (std::size_t j = 0; j < mu; ++j) {
      const Vector col = q.element(bi.shifted(q.basis_[j], 1));
      for (std::size_t k = 0; k < mu; ++k) op(k, j) = col[k];
    }
    ops.push_back(std::move(op));
  }
  q.algebra_ = std::make_shared<const FiniteAlgebra>(p.field, std::move(labels), std::move(ops),
                                                     q.element(Polynomial::constant(p.field, n, 1)));
  return q;
}

Polynomial QuotientRing::normal_form(const Polynomial& f) const {
  return gobelin::normal_form(f, gb_, pres_.order);
}

Vector QuotientRing::element(const Polynomial& f) const {
  require_same_field(f.field(), pres_.field, "quotient element");
  if (f.nvars() != pres_.variables.size()) throw Error(ErrorKind::Input, "element has the wrong number of variables");
  const Polynomial r = normal_form(f);
  Vector v(basis_.size());
  for (const auto& [m, c] : r.terms()) {
    auto it = std::lower_bound(basis_.begin(), basis_.end(), m,
                               [&](const Monomial& a, const Monomial& b) { return pres_.order.less(a, b); });
    v[static_cast<std::size_t>(it - basis_.begin())] = c;
  }
  return v;
}

Polynomial QuotientRing::lift(const Vector& coords) const {
  Polynomial p(pres_.field, pres_.variables.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) p.add_term(basis_[i], coords.at(i));
  return p;
}

FiniteAlgebra build_quotient_algebra(const QuotientPresentation& p) { return *QuotientRing::build(p).algebra(); }

}  // namespace gobelin
