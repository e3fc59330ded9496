#include "charp/scalar.hpp"

#include "charp/errors.hpp"

namespace charp {

Scalar Scalar::zero(const FieldPtr& field) {
  std::size_t w = field->parameter_count();
  return Scalar(field, ParamPoly::zero(w),
                ParamPoly::constant(w, 1, field->characteristic()));
}

Scalar Scalar::one(const FieldPtr& field) {
  return from_int(field, 1);
}

Scalar Scalar::from_int(const FieldPtr& field, long long v) {
  std::size_t w = field->parameter_count();
  std::uint32_t p = field->characteristic();
  return Scalar(field, ParamPoly::constant(w, fp_from_ll(v, p), p),
                ParamPoly::constant(w, 1, p));
}

Scalar Scalar::parameter(const FieldPtr& field, std::size_t index) {
  if (index >= field->parameter_count())
    throw InvalidArgumentError("parameter index out of range");
  std::size_t w = field->parameter_count();
  return Scalar(field, ParamPoly::parameter(w, index),
                ParamPoly::constant(w, 1, field->characteristic()));
}

Scalar Scalar::from_poly(const FieldPtr& field, ParamPoly num) {
  std::size_t w = field->parameter_count();
  return Scalar(field, std::move(num),
                ParamPoly::constant(w, 1, field->characteristic()));
}

Scalar Scalar::fraction(const FieldPtr& field, ParamPoly num, ParamPoly den) {
  std::uint32_t p = field->characteristic();
  std::size_t w = field->parameter_count();
  if (den.is_zero()) throw DivisionByZeroError();
  if (num.is_zero())
    return Scalar(field, ParamPoly::zero(w), ParamPoly::constant(w, 1, p));
  if (!den.is_constant()) {
    ParamPoly g = pp_gcd(num, den, p);
    if (!g.is_one()) {
      num = pp_divexact(num, g, p);
      den = pp_divexact(den, g, p);
    }
  }
  std::uint32_t lc = den.leading_coeff();
  if (lc != 1) {
    std::uint32_t inv = fp_inverse(lc, p);
    num = pp_scale(num, inv, p);
    den = pp_scale(den, inv, p);
  }
  return Scalar(field, std::move(num), std::move(den));
}

std::uint32_t Scalar::constant_value() const {
  if (!is_constant())
    throw InvalidArgumentError("scalar is not a prime-field constant");
  return num_.constant_value();
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (den_.is_one() && o.den_.is_one())
    return Scalar(field_, pp_add(num_, o.num_, p()), den_);
  return fraction(field_,
                  pp_add(pp_mul(num_, o.den_, p()), pp_mul(o.num_, den_, p()), p()),
                  pp_mul(den_, o.den_, p()));
}

Scalar Scalar::operator-() const {
  return Scalar(field_, pp_neg(num_, p()), den_);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (den_.is_one() && o.den_.is_one())
    return Scalar(field_, pp_mul(num_, o.num_, p()), den_);
  return fraction(field_, pp_mul(num_, o.num_, p()),
                  pp_mul(den_, o.den_, p()));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ZeroInverseError();
  return fraction(field_, den_, num_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::pow(std::uint64_t n) const {
  Scalar acc = one(field_);
  Scalar base = *this;
  while (n) {
    if (n & 1) acc = acc * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return acc;
}

Scalar Scalar::frobenius(unsigned e) const {
  if (e == 0 || is_zero()) return *this;
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p();
    if (q > (1ull << 40)) throw OverflowError();
  }
  // normalization is preserved: gcd(f^q, g^q) = gcd(f,g)^q and lc(den^q) = 1
  return Scalar(field_, pp_frobenius(num_, q), pp_frobenius(den_, q));
}

std::string Scalar::to_string() const {
  const auto& names = field_->parameters();
  std::string s = num_.to_string(names);
  if (!den_.is_one()) {
    bool np = num_.terms().size() > 1;
    bool dp = den_.terms().size() > 1;
    std::string d = den_.to_string(names);
    s = (np ? "(" + s + ")" : s) + "/" + (dp ? "(" + d + ")" : d);
  }
  return s;
}

Scalar promote_scalar(const Scalar& s, const FieldPtr& target) {
  if (s.is_null()) throw InvalidArgumentError("null scalar");
  const FieldDescriptor& from = *s.field();
  if (from == *target) return s;
  if (from.characteristic() != target->characteristic())
    throw RingMismatchError("different characteristics");
  if (!from.prime_field())
    throw RingMismatchError("incompatible parameter lists");
  return Scalar::from_int(target, s.numerator().constant_value());
}

}  // namespace charp
