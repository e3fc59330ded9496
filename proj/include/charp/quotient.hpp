#ifndef CHARP_QUOTIENT_HPP
#define CHARP_QUOTIENT_HPP

#include <optional>

#include "charp/ideal.hpp"

namespace charp {

class RingPresentation;
using RingPresPtr = std::shared_ptr<const RingPresentation>;

// Quotient ring R = S/J presented by an ambient polynomial ring and a proper
// relation ideal. The local rings of the theory are modeled by these graded/
// affine quotients with m = (variables); element equality is decided by
// normal forms modulo GB(J).
class RingPresentation {
public:
  static RingPresPtr make(RingPtr ambient, IdealHandle relations);
  // polynomial ring viewed as a presentation with J = (0)
  static RingPresPtr polynomial(RingPtr ambient);

  const RingPtr& ambient() const { return ambient_; }
  const IdealHandle& relations() const { return relations_; }
  std::size_t dimension() const { return dim_; }
  bool has_relations() const { return !ideal_is_zero(relations_); }

  Polynomial reduce(const Polynomial& f) const;
  bool elements_equal(const Polynomial& f, const Polynomial& g) const;
  bool is_zero_in_ring(const Polynomial& f) const;

  // the variable ideal (x_1,...,x_n); lift of the maximal ideal m
  IdealHandle max_ideal_lift() const;

  std::string to_string() const;

private:
  RingPresentation(RingPtr ambient, IdealHandle relations, std::size_t dim)
      : ambient_(std::move(ambient)), relations_(std::move(relations)),
        dim_(dim) {}

  RingPtr ambient_;
  IdealHandle relations_;
  std::size_t dim_;
};

// Ideal of R = S/J carried as its given generators (polynomials in S read
// modulo J) together with the lift ideal gens + J.
class QuotientIdeal {
public:
  QuotientIdeal() = default;
  QuotientIdeal(RingPresPtr ring, std::vector<Polynomial> gens);

  const RingPresPtr& ring() const { return ring_; }
  bool valid() const { return ring_ != nullptr; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  const IdealHandle& lift() const { return lift_; }

  bool contains(const Polynomial& f) const;
  bool equals(const QuotientIdeal& o) const;
  // o subseteq *this
  bool contains_ideal(const QuotientIdeal& o) const;
  bool is_proper() const;

  std::string to_string() const;

private:
  RingPresPtr ring_;
  std::vector<Polynomial> gens_;
  IdealHandle lift_;
};

RingPresPtr quotient_ring(RingPtr ambient, IdealHandle relations);

QuotientIdeal quotient_ideal_sum(const QuotientIdeal& a, const QuotientIdeal& b);
QuotientIdeal quotient_ideal_product(const QuotientIdeal& a,
                                     const QuotientIdeal& b);
QuotientIdeal quotient_ideal_intersection(const QuotientIdeal& a,
                                          const QuotientIdeal& b);
QuotientIdeal quotient_ideal_colon(const QuotientIdeal& a,
                                   const QuotientIdeal& b);
QuotientIdeal max_ideal(const RingPresPtr& R);

// x_{i+1} a nonzerodivisor modulo (x_1..x_i) at every step, and the whole
// sequence generates a proper ideal.
bool is_regular_sequence(const std::vector<Polynomial>& xs, const RingPresPtr& R);

// finite-length colon criterion: ((A : x) subseteq sat(A, m)) at every step
bool is_filter_regular_sequence(const std::vector<Polynomial>& xs,
                                const RingPresPtr& R);

// dim R/(x_1..x_i) = dim R - i for every prefix; TooManyElementsError when
// the sequence is longer than dim R.
bool is_system_of_parameters(const std::vector<Polynomial>& xs,
                             const RingPresPtr& R);
// convenience: the given generators of q form a system of parameters
bool is_parameter_ideal(const QuotientIdeal& q);

// Presentation of the subring generated by `gens`: a fresh polynomial ring T
// with one variable per generator, the kernel K of T -> R, and enough state
// to rewrite subring elements of R in the T variables.
struct SubringPresentation {
  RingPresPtr source;               // R the generators live in
  std::vector<Polynomial> generators;
  RingPtr presentation_ring;        // T
  IdealHandle kernel;               // K subset T
  RingPresPtr presented;            // T/K
  RingPtr combined;                 // [S-vars | T-vars], elimination order
  IdealHandle graph;                // J_S + (t_i - g_i) in the combined ring

  // Rewrites an element of S lying in the subring (mod J) as a polynomial in
  // the presentation variables; NotInSubringError otherwise.
  Polynomial contract(const Polynomial& s) const;
  // The embedding T -> S sending each presentation variable to its generator.
  RingMap embedding() const;
};

SubringPresentation subring_presentation(const RingPresPtr& R,
                                         std::vector<Polynomial> gens,
                                         std::vector<std::string> names = {});

// Degree-d Veronese: subring generated by the degree-d normal monomials.
// Requires homogeneous relations. Generator order is descending graded-lex,
// names drawn from a,b,c,... avoiding collisions.
SubringPresentation veronese_presentation(const RingPresPtr& R, unsigned degree);

// normal (standard) monomials modulo the relations, up to total degree bound
std::vector<Polynomial> normal_monomials(const RingPresPtr& R, unsigned maxdeg);

}  // namespace charp

#endif
