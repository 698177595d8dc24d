#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "exactlin/error.hpp"

namespace gobelin {

// Every scalar is an exact rational. Over F_p the value is kept as an integer
// representative in [0, p).
using Scalar = mpq_class;

// The base field: Q (characteristic 0) or F_p for a prime p < 2^31.
class FieldSpec {
 public:
  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec(); }
  static FieldSpec prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar from_int(long v) const;
  Scalar from_fraction(const mpz_class& num, const mpz_class& den) const;

  // Brings an arbitrary rational into canonical form for this field.
  Scalar reduce(const Scalar& v) const;
  bool is_canonical(const Scalar& v) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;

  // Residue helpers for the machine-word elimination path.
  std::uint32_t to_residue(const Scalar& v) const;
  std::uint32_t inv_residue(std::uint32_t a) const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) { return a.p_ == b.p_; }
  friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return a.p_ != b.p_; }

 private:
  explicit FieldSpec(std::uint32_t p) : p_(p) {}

  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

std::string to_string(const Scalar& v);

}  // namespace gobelin
