#ifndef CHARP_SCALAR_HPP
#define CHARP_SCALAR_HPP

#include <string>

#include "charp/field.hpp"
#include "charp/param_poly.hpp"

namespace charp {

// Element of F_p or F_p(u_1,...,u_m): a normalized fraction num/den of
// parameter polynomials. Invariants: den != 0, gcd(num, den) is a unit, den
// is lex-monic; over a prime field den = 1 and num is a constant in [0, p).
// Values are immutable; every operation returns a fresh scalar.
class Scalar {
public:
  Scalar() = default;  // detached null scalar; only valid as a placeholder

  static Scalar zero(const FieldPtr& field);
  static Scalar one(const FieldPtr& field);
  static Scalar from_int(const FieldPtr& field, long long v);
  static Scalar parameter(const FieldPtr& field, std::size_t index);
  // ratfunc_normalize: the unique normalized representative of num/den.
  static Scalar fraction(const FieldPtr& field, ParamPoly num, ParamPoly den);
  static Scalar from_poly(const FieldPtr& field, ParamPoly num);

  const FieldPtr& field() const { return field_; }
  bool is_null() const { return field_ == nullptr; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  const ParamPoly& numerator() const { return num_; }
  const ParamPoly& denominator() const { return den_; }
  // constant scalar in [0, p); requires a parameter-free value
  std::uint32_t constant_value() const;
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(std::uint64_t n) const;
  // a^(p^e), computed termwise on numerator and denominator.
  Scalar frobenius(unsigned e) const;

  bool operator==(const Scalar& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string to_string() const;

private:
  Scalar(FieldPtr field, ParamPoly num, ParamPoly den)
      : field_(std::move(field)), num_(std::move(num)), den_(std::move(den)) {}

  std::uint32_t p() const { return field_->characteristic(); }

  FieldPtr field_;
  ParamPoly num_;
  ParamPoly den_;
};

// Converts a scalar into a field with more parameters (or from the prime
// subfield); parameter lists must agree where both are present.
Scalar promote_scalar(const Scalar& s, const FieldPtr& target);

}  // namespace charp

#endif
