#include "polyring/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace gobelin {

unsigned total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0u); }

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Monomial monomial_quotient(const Monomial& b, const Monomial& a) {
  Monomial out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = b[i] - a[i];
  return out;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
  if (kind_ == Kind::Lex) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
  const unsigned da = total_degree(a);
  const unsigned db = total_degree(b);
  if (da != db) return da < db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

Polynomial Polynomial::constant(FieldSpec field, std::size_t nvars, const Scalar& c) {
  Polynomial p(field, nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(FieldSpec field, std::size_t nvars, std::size_t i) {
  Monomial m(nvars, 0);
  m[i] = 1;
  return term(field, m, 1);
}

Polynomial Polynomial::term(FieldSpec field, const Monomial& m, const Scalar& c) {
  Polynomial p(field, m.size());
  p.add_term(m, c);
  return p;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  const Scalar v = field_.reduce(c);
  if (sgn(v) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, v);
  if (inserted) return;
  it->second = field_.add(it->second, v);
  if (sgn(it->second) == 0) terms_.erase(it);
}

const Monomial& Polynomial::leading_monomial(const MonomialOrder& order) const {
  if (terms_.empty()) throw Error(ErrorKind::Input, "leading monomial of zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it) {
    if (order.less(best->first, it->first)) best = it;
  }
  return best->first;
}

Scalar Polynomial::leading_coefficient(const MonomialOrder& order) const {
  return terms_.at(leading_monomial(order));
}

void Polynomial::require_compatible(const Polynomial& o, const char* what) const {
  require_same_field(field_, o.field_, what);
  if (nvars_ != o.nvars_) throw Error(ErrorKind::Input, std::string(what) + ": variable count mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_compatible(o, "polynomial sum");
  Polynomial out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  require_compatible(o, "polynomial difference");
  Polynomial out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, field_.neg(c));
  return out;
}

Polynomial Polynomial::operator-() const { return scaled(Scalar(-1)); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_compatible(o, "polynomial product");
  Polynomial out(field_, nvars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) out.add_term(monomial_product(ma, mb), field_.mul(ca, cb));
  }
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(field_, nvars_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  Polynomial out(field_, nvars_);
  const Scalar r = field_.reduce(c);
  if (sgn(r) == 0) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m, field_.mul(r, v));
  return out;
}

Polynomial Polynomial::shifted(const Monomial& m, const Scalar& c) const {
  Polynomial out(field_, nvars_);
  const Scalar r = field_.reduce(c);
  if (sgn(r) == 0) return out;
  for (const auto& [t, v] : terms_) out.terms_.emplace(monomial_product(t, m), field_.mul(r, v));
  return out;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
  if (is_zero()) return *this;
  return scaled(field_.inv(leading_coefficient(order)));
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  // Print in decreasing degrevlex order for readability.
  std::vector<const Terms::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  const MonomialOrder drl = MonomialOrder::degrevlex();
  std::sort(order.begin(), order.end(),
            [&](const auto* a, const auto* b) { return drl.less(b->first, a->first); });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : order) {
    Scalar c = t->second;
    const bool neg = !field_.is_rational() ? false : sgn(c) < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const bool is_const = total_degree(t->first) == 0;
    bool wrote = false;
    if (c != 1 || is_const) {
      os << c.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < t->first.size(); ++i) {
      const unsigned e = t->first[i];
      if (e == 0) continue;
      if (wrote) os << "*";
      os << names.at(i);
      if (e > 1) os << "^" << e;
      wrote = true;
    }
  }
  return os.str();
}

namespace {

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& vars, FieldSpec field,
         std::size_t line, std::size_t offset)
      : text_(text), vars_(vars), field_(field), line_(line), offset_(offset) {}

  Polynomial run() {
    skip_ws();
    if (pos_ == text_.size()) fail("empty expression");
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at column " + std::to_string(offset_ + pos_ + 1), line_, offset_ + pos_ + 1);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      mpz_class e = integer();
      if (e > 1000) {
        pos_ = start;
        fail("exponent too large");
      }
      return base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  mpz_class integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(text_.substr(start, pos_ - start));
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ == text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      mpz_class num = integer();
      mpz_class den = 1;
      if (accept('/')) {
        den = integer();
        if (den == 0) {
          pos_ = start;
          fail("zero denominator");
        }
      }
      try {
        return Polynomial::constant(field_, vars_.size(), field_.from_fraction(num, den));
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        pos_ = start;
        fail(e.what());
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name = text_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == name) return Polynomial::variable(field_, vars_.size(), i);
      }
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    fail(std::string("unexpected '") + c + "'");
  }

  const std::string& text_;
  const std::vector<std::string>& vars_;
  FieldSpec field_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(const std::string& text, const std::vector<std::string>& variables,
                      FieldSpec field, std::size_t line, std::size_t column_offset) {
  return Parser(text, variables, field, line, column_offset).run();
}

}  // namespace gobelin
