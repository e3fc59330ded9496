#ifndef CHARP_FROBENIUS_HPP
#define CHARP_FROBENIUS_HPP

#include "charp/verdict.hpp"

namespace charp {

// q = (p^e)-th bracket power of an ideal of R, generated by the q-th powers
// of the given generators; independent of the generating set.
QuotientIdeal bracket_power(const QuotientIdeal& I, unsigned e);

// Full preimage {s : s^(p^e) in K} of an ambient ideal under the e-th
// Frobenius endomorphism, via the kernel of S -> S/K, x_i -> x_i^(p^e).
// Prime-field coefficients only.
IdealHandle frobenius_preimage(const IdealHandle& K, unsigned e);

// IN with certificate e when x^(p^e) lies in the lifted bracket power for
// some e <= emax (membership persists for larger e); UNKNOWN otherwise.
// Never OUT: failure at finitely many exponents refutes nothing.
Verdict frobenius_membership(const Polynomial& x, const QuotientIdeal& I,
                             unsigned emax);

// Ascending chain C_e = F^{-e}(I^[p^e]); stable once window+1 consecutive
// entries agree. The last entry is the computed closure candidate.
struct ClosureChain {
  QuotientIdeal base;
  std::vector<std::pair<unsigned, QuotientIdeal>> entries;
  bool stable = false;
  unsigned window = 2;

  const QuotientIdeal& candidate() const { return entries.back().second; }
};

ClosureChain frobenius_closure(const QuotientIdeal& I, unsigned emax,
                               unsigned window);

struct ClosedParams {
  unsigned emax = 4;
  unsigned window = 2;
  unsigned probe_degree = 4;
  std::vector<Polynomial> probes;  // ambient-ring elements, optional
};

// IN when the chain is stable at I (prime field) or no probe witnesses
// (parameter field; element-level route only, since Frobenius is not an
// algebra endomorphism over F_p(u,...)). OUT carries a witness (x, e) with
// x notin I and x^(p^e) in I^[p^e]. The narrative names the route taken.
Verdict is_frobenius_closed(const QuotientIdeal& I, const ClosedParams& params);

// Prop-style bracket-commutation condition for one parameter ideal:
// (q^F)^[p] = (q^[p])^F, both sides computed via closure chains.
struct BracketCommuteReport {
  bool pass = false;
  bool certified = false;  // both chains window-stable
  ClosureChain lhs_chain;  // chain of q
  ClosureChain rhs_chain;  // chain of q^[p]
  QuotientIdeal lhs;       // (q^F)^[p]
  QuotientIdeal rhs;       // (q^[p])^F

  Status status() const {
    if (!certified) return Status::Unknown;
    return pass ? Status::In : Status::Out;
  }
};

BracketCommuteReport bracket_commute_check(const QuotientIdeal& q,
                                           unsigned emax, unsigned window);

// Default probe pool: user probes, generator*variable products, and normal
// monomials up to the degree bound, reduced and deduplicated, members of I
// excluded.
std::vector<Polynomial> closure_probes(const QuotientIdeal& I,
                                       const ClosedParams& params);

}  // namespace charp

#endif
