#pragma once

#include <random>
#include <string>
#include <vector>

#include "polyring/groebner.hpp"

namespace gobelin::testing {

// Builds K[vars]/(relations) from text, e.g. quotient({"x"}, {"x^4"}).
inline QuotientRing quotient(const std::vector<std::string>& vars, const std::vector<std::string>& relations,
                             FieldSpec field = FieldSpec::rationals()) {
  QuotientPresentation p;
  p.field = field;
  p.variables = vars;
  for (const auto& r : relations) p.generators.push_back(parse_poly(r, vars, field));
  return QuotientRing::build(p);
}

inline Vector elem(const QuotientRing& q, const std::string& text) {
  return q.element(parse_poly(text, q.presentation().variables, q.presentation().field));
}

inline Vector pair(const QuotientRing& q, const std::string& a, const std::string& b) {
  Vector v = elem(q, a);
  const Vector w = elem(q, b);
  v.insert(v.end(), w.begin(), w.end());
  return v;
}

inline Matrix random_int_matrix(FieldSpec f, std::size_t rows, std::size_t cols, int lo, int hi,
                                std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(lo, hi);
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = f.from_int(d(rng));
  }
  return m;
}

// Low-rank random matrix: product of random factors.
inline Matrix random_low_rank(FieldSpec f, std::size_t rows, std::size_t cols, std::size_t inner,
                              std::mt19937_64& rng) {
  return random_int_matrix(f, rows, inner, -2, 2, rng) * random_int_matrix(f, inner, cols, -2, 2, rng);
}

// Random element of B with coefficients in {-1, 0, 1}.
inline Vector random_element(const FiniteAlgebra& b, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-1, 1);
  Vector v(b.mu());
  for (auto& x : v) x = b.field().from_int(d(rng));
  return v;
}

}  // namespace gobelin::testing

#include "koszul/koszul.hpp"

namespace gobelin::testing {

inline SyzygyPair syzygies(const QuotientRing& q, const std::string& f1, const std::string& f2,
                           const std::string& c11, const std::string& c12, const std::string& c21,
                           const std::string& c22) {
  return make_syzygy_pair(q.algebra(), elem(q, f1), elem(q, f2), elem(q, c11), elem(q, c12), elem(q, c21),
                          elem(q, c22));
}

inline KoszulData koszul_of(const QuotientRing& q, const std::string& f1, const std::string& f2) {
  return koszul(q.algebra(), choose_trace(*q.algebra()), elem(q, f1), elem(q, f2));
}

inline std::string failures(const std::vector<Check>& checks) {
  std::string out;
  for (const auto& c : checks) {
    if (!c.pass) out += c.name + ": expected " + c.expected + ", got " + c.actual + "\n";
  }
  return out;
}

}  // namespace gobelin::testing
