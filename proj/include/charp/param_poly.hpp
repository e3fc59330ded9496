#ifndef CHARP_PARAM_POLY_HPP
#define CHARP_PARAM_POLY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "charp/expvec.hpp"

namespace charp {

// Polynomial over F_p in the field parameters u_1,...,u_m. This is the
// numerator/denominator type of Scalar, not the main polynomial type.
// Terms are sorted strictly descending under lex in declaration order and
// carry coefficients in [1, p).
struct PTerm {
  ExpVec exp;
  std::uint32_t coeff;
  bool operator==(const PTerm& o) const {
    return coeff == o.coeff && exp == o.exp;
  }
};

class ParamPoly {
public:
  ParamPoly() = default;  // zero polynomial of width 0; widen() adjusts

  static ParamPoly zero(std::size_t width);
  static ParamPoly constant(std::size_t width, std::uint32_t c, std::uint32_t p);
  static ParamPoly parameter(std::size_t width, std::size_t index);
  // Normalizes arbitrary term soup: sorts, combines, drops zeros mod p.
  static ParamPoly from_terms(std::size_t width, std::vector<PTerm> terms,
                              std::uint32_t p);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  std::size_t width() const { return width_; }
  const std::vector<PTerm>& terms() const { return terms_; }

  // Lex-leading coefficient; 0 for the zero polynomial.
  std::uint32_t leading_coeff() const;
  std::uint32_t constant_value() const;  // requires is_constant()
  std::uint64_t total_degree() const;
  std::uint32_t degree_in(std::size_t k) const;

  bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const ParamPoly& o) const { return !(*this == o); }

  std::string to_string(const std::vector<std::string>& names) const;

private:
  friend ParamPoly pp_add(const ParamPoly&, const ParamPoly&, std::uint32_t);
  friend ParamPoly pp_neg(const ParamPoly&, std::uint32_t);
  friend ParamPoly pp_mul(const ParamPoly&, const ParamPoly&, std::uint32_t);
  friend ParamPoly pp_scale(const ParamPoly&, std::uint32_t, std::uint32_t);
  friend ParamPoly pp_frobenius(const ParamPoly&, std::uint64_t);

  std::size_t width_ = 0;
  std::vector<PTerm> terms_;
};

ParamPoly pp_add(const ParamPoly& a, const ParamPoly& b, std::uint32_t p);
ParamPoly pp_sub(const ParamPoly& a, const ParamPoly& b, std::uint32_t p);
ParamPoly pp_neg(const ParamPoly& a, std::uint32_t p);
ParamPoly pp_mul(const ParamPoly& a, const ParamPoly& b, std::uint32_t p);
ParamPoly pp_scale(const ParamPoly& a, std::uint32_t c, std::uint32_t p);
ParamPoly pp_pow(const ParamPoly& a, std::uint64_t n, std::uint32_t p);
// a^(p^e) termwise: coefficients are Frobenius-fixed in F_p, exponents scale.
ParamPoly pp_frobenius(const ParamPoly& a, std::uint64_t q);

// Exact division; throws InvalidArgumentError when b does not divide a.
ParamPoly pp_divexact(const ParamPoly& a, const ParamPoly& b, std::uint32_t p);
bool pp_divides(const ParamPoly& b, const ParamPoly& a, std::uint32_t p);

// Canonical gcd: primitive and lex-monic. gcd(0,0) = 0.
ParamPoly pp_gcd(const ParamPoly& a, const ParamPoly& b, std::uint32_t p);

// Scales so the lex-leading coefficient is 1.
ParamPoly pp_monic(const ParamPoly& a, std::uint32_t p);

}  // namespace charp

#endif
