#ifndef CHARP_ORACLE_HPP
#define CHARP_ORACLE_HPP

#include <cstdint>

#include "charp/ideal.hpp"

namespace charp {

// Independent brute-force verifiers backing the property tests. Nothing here
// goes through the Groebner engine.

// Degree-d slice of a homogeneous ideal: the monomial basis and the matrix
// of generator multiples expressed in it.
struct GradedSlice {
  RingPtr ring;
  unsigned degree = 0;
  std::vector<ExpVec> basis;                 // degree-d monomials, descending
  std::vector<std::vector<Scalar>> rows;     // one row per generator multiple
};

GradedSlice graded_slice(const IdealHandle& I, unsigned degree);

// Exact linear-algebra membership of a homogeneous f of degree d in the span
// of degree-d multiples of the (homogeneous) generators. Fraction-free
// Bareiss elimination over the coefficient polynomials; no floating point.
// NotHomogeneousError when f or a generator is not homogeneous.
bool linalg_membership(const Polynomial& f, const IdealHandle& I, unsigned degree);

// true iff some generator of the monomial ideal divides m
bool monomial_membership_bruteforce(const ExpVec& m,
                                    const std::vector<ExpVec>& gens);
bool monomial_membership_bruteforce(const Polynomial& m, const IdealHandle& M);

// all monomials of total degree <= maxdeg (ascending degree, then descending
// ring order within a degree)
std::vector<ExpVec> all_monomials_up_to(std::size_t nvars, unsigned maxdeg);

struct RandomProfile {
  std::uint32_t p = 2;
  std::size_t nvars = 3;
  unsigned max_degree = 3;
  std::size_t generators = 2;
  bool homogeneous = false;
};

// Deterministic for a fixed seed: a polynomial ring over F_p and a nonzero
// proper ideal drawn from the profile.
struct RandomInstance {
  RingPtr ring;
  IdealHandle ideal;
  Polynomial probe;  // random element, same degree bounds
};

RandomInstance random_instance(std::uint64_t seed, const RandomProfile& profile);

}  // namespace charp

#endif
