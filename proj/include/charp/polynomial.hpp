#ifndef CHARP_POLYNOMIAL_HPP
#define CHARP_POLYNOMIAL_HPP

#include <memory>
#include <string>
#include <vector>

#include "charp/monomial.hpp"
#include "charp/scalar.hpp"

namespace charp {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

// Ambient polynomial ring: coefficient field, named variables, and the
// monomial order its elements are kept canonical under.
class PolyRing {
public:
  PolyRing(FieldPtr field, std::vector<std::string> vars, MonomialOrder order);

  const FieldPtr& field() const { return field_; }
  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const MonomialOrder& order() const { return order_; }
  int variable_index(const std::string& name) const;  // -1 if absent

  bool same_as(const PolyRing& o) const;

  std::string to_string() const;

private:
  FieldPtr field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

RingPtr make_poly_ring(FieldPtr field, std::vector<std::string> vars,
                       MonomialOrder order);
RingPtr make_poly_ring(FieldPtr field, std::vector<std::string> vars);

struct Term {
  ExpVec exp;
  Scalar coeff;
};

// Element of a PolyRing in canonical form: term list strictly descending
// under the ring's order, no zero coefficients. Immutable value type.
class Polynomial {
public:
  Polynomial() = default;  // detached zero; most APIs require a ring

  static Polynomial zero(RingPtr ring);
  static Polynomial one(RingPtr ring);
  static Polynomial constant(RingPtr ring, Scalar c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, ExpVec exp, Scalar c);
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }

  const Term& leading_term() const;
  std::uint64_t total_degree() const;
  // -1 when not homogeneous; total degree otherwise (zero counts as any
  // degree, reported 0)
  long long homogeneous_degree() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scale(const Scalar& c) const;
  Polynomial mul_term(const ExpVec& exp, const Scalar& c) const;
  Polynomial pow(std::uint64_t n) const;
  // f^(p^e) computed termwise: (c, a) -> (c^(p^e), p^e * a).
  Polynomial frobenius_power(unsigned e) const;
  // partial derivative wrt a variable (exponents reduce mod p naturally)
  Polynomial derivative(std::size_t var) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  std::string to_string() const;

private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

void check_same_ring(const Polynomial& a, const Polynomial& b);

// q = p^e as a 64-bit value with overflow guard.
std::uint64_t power_of_char(std::uint32_t p, unsigned e);

// Rebuilds f in `target`, which must have the same field and variables (only
// the order may differ); terms are re-sorted canonically.
Polynomial convert_to_ring(const Polynomial& f, const RingPtr& target);

}  // namespace charp

#endif
