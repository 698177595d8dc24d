#include "exactlin/field.hpp"

namespace gobelin {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Input: return "InputError";
    case ErrorKind::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorKind::NotGorenstein: return "NotGorenstein";
    case ErrorKind::UnitElement: return "UnitElement";
    case ErrorKind::SyzygyViolation: return "SyzygyViolation";
    case ErrorKind::ComplexBroken: return "ComplexBroken";
    case ErrorKind::NotChainCompatible: return "NotChainCompatible";
    case ErrorKind::NotACycle: return "NotACycle";
    case ErrorKind::NotStabilized: return "NotStabilized";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw Error(ErrorKind::Input, "field characteristic must be a prime below 2^31, got " +
                                      std::to_string(p));
  }
  return FieldSpec(static_cast<std::uint32_t>(p));
}

std::string FieldSpec::name() const {
  return is_rational() ? std::string("Q") : "F_" + std::to_string(p_);
}

Scalar FieldSpec::from_int(long v) const { return reduce(Scalar(v)); }

Scalar FieldSpec::from_fraction(const mpz_class& num, const mpz_class& den) const {
  if (den == 0) throw Error(ErrorKind::Input, "zero denominator");
  if (is_rational()) {
    Scalar q(num, den);
    q.canonicalize();
    return q;
  }
  mpz_class d = den % p_;
  if (d == 0) {
    throw Error(ErrorKind::Input, "denominator " + den.get_str() + " vanishes in " + name());
  }
  Scalar n = reduce(Scalar(num));
  return mul(n, inv(Scalar(d)));
}

Scalar FieldSpec::reduce(const Scalar& v) const {
  if (is_rational()) return v;
  mpz_class num = v.get_num() % p_;
  if (num < 0) num += p_;
  mpz_class den = v.get_den() % p_;
  if (den == 0) throw Error(ErrorKind::Input, "value " + v.get_str() + " is undefined in " + name());
  if (den != 1) {
    mpz_class dinv;
    mpz_class pp(p_);
    mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), pp.get_mpz_t());
    num = (num * dinv) % p_;
  }
  return Scalar(num);
}

bool FieldSpec::is_canonical(const Scalar& v) const {
  if (is_rational()) return true;
  return v.get_den() == 1 && v.get_num() >= 0 && v.get_num() < p_;
}

Scalar FieldSpec::add(const Scalar& a, const Scalar& b) const {
  if (is_rational()) return a + b;
  std::uint64_t s = std::uint64_t{to_residue(a)} + to_residue(b);
  return Scalar(static_cast<unsigned long>(s % p_));
}

Scalar FieldSpec::sub(const Scalar& a, const Scalar& b) const {
  if (is_rational()) return a - b;
  std::uint64_t s = std::uint64_t{to_residue(a)} + p_ - to_residue(b);
  return Scalar(static_cast<unsigned long>(s % p_));
}

Scalar FieldSpec::mul(const Scalar& a, const Scalar& b) const {
  if (is_rational()) return a * b;
  std::uint64_t s = std::uint64_t{to_residue(a)} * to_residue(b);
  return Scalar(static_cast<unsigned long>(s % p_));
}

Scalar FieldSpec::neg(const Scalar& a) const {
  if (is_rational()) return -a;
  std::uint32_t r = to_residue(a);
  return Scalar(static_cast<unsigned long>(r == 0 ? 0 : p_ - r));
}

Scalar FieldSpec::inv(const Scalar& a) const {
  if (sgn(a) == 0) throw Error(ErrorKind::Input, "division by zero");
  if (is_rational()) return 1 / a;
  return Scalar(static_cast<unsigned long>(inv_residue(to_residue(a))));
}

std::uint32_t FieldSpec::to_residue(const Scalar& v) const {
  if (!is_canonical(v)) return static_cast<std::uint32_t>(reduce(v).get_num().get_ui());
  return static_cast<std::uint32_t>(v.get_num().get_ui());
}

std::uint32_t FieldSpec::inv_residue(std::uint32_t a) const {
  // Fermat: a^(p-2).
  std::uint64_t result = 1;
  std::uint64_t base = a % p_;
  std::uint64_t e = p_ - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::string to_string(const Scalar& v) { return v.get_str(); }

}  // namespace gobelin
