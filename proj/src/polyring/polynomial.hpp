#pragma once

#include <map>
#include <string>
#include <vector>

#include "exactlin/matrix.hpp"

namespace gobelin {

using Monomial = std::vector<unsigned>;  // exponent vector, one slot per variable

unsigned total_degree(const Monomial& m);
bool divides(const Monomial& a, const Monomial& b);
Monomial monomial_product(const Monomial& a, const Monomial& b);
Monomial monomial_quotient(const Monomial& b, const Monomial& a);  // b / a, requires divides(a, b)
Monomial monomial_lcm(const Monomial& a, const Monomial& b);

class MonomialOrder {
 public:
  enum class Kind { DegRevLex, Lex };

  MonomialOrder() = default;
  explicit MonomialOrder(Kind kind) : kind_(kind) {}

  static MonomialOrder degrevlex() { return MonomialOrder(Kind::DegRevLex); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }

  Kind kind() const { return kind_; }
  // Strict "a < b". Variables are ordered x_0 > x_1 > ... as listed.
  bool less(const Monomial& a, const Monomial& b) const;

 private:
  Kind kind_ = Kind::DegRevLex;
};

// Sparse polynomial over a FieldSpec. Terms with zero coefficient are never stored.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Scalar>;

  Polynomial() = default;
  Polynomial(FieldSpec field, std::size_t nvars) : field_(field), nvars_(nvars) {}

  static Polynomial constant(FieldSpec field, std::size_t nvars, const Scalar& c);
  static Polynomial variable(FieldSpec field, std::size_t nvars, std::size_t i);
  static Polynomial term(FieldSpec field, const Monomial& m, const Scalar& c);

  const FieldSpec& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coefficient(const Monomial& m) const;
  // Adds c * m; drops the term if it cancels.
  void add_term(const Monomial& m, const Scalar& c);

  const Monomial& leading_monomial(const MonomialOrder& order) const;
  Scalar leading_coefficient(const MonomialOrder& order) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial pow(unsigned e) const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial shifted(const Monomial& m, const Scalar& c) const;  // c * m * this
  Polynomial monic(const MonomialOrder& order) const;

  std::string to_string(const std::vector<std::string>& names) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void require_compatible(const Polynomial& o, const char* what) const;

  FieldSpec field_;
  std::size_t nvars_ = 0;
  Terms terms_;
};

// Grammar: integers, rationals a/b, names [a-zA-Z][a-zA-Z0-9_]*, + - * ^ and
// parentheses; ^ binds tightest and takes a nonnegative integer exponent.
// Errors are ParseError with a 1-based column; `line` is passed through.
Polynomial parse_poly(const std::string& text, const std::vector<std::string>& variables,
                      FieldSpec field, std::size_t line = 1, std::size_t column_offset = 0);

}  // namespace gobelin
