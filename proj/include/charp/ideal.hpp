#ifndef CHARP_IDEAL_HPP
#define CHARP_IDEAL_HPP

#include <map>
#include <memory>
#include <mutex>

#include "charp/polynomial.hpp"
#include "charp/ring_map.hpp"

namespace charp {

// Ideal in an ambient polynomial ring: a generator list plus lazily computed
// reduced Groebner bases, cached per monomial order. Handles are cheap to
// copy and share their cache; the cache is single-writer-per-key, so
// concurrent requests for the same (ideal, order) compute once.
class IdealHandle {
public:
  IdealHandle() = default;
  IdealHandle(RingPtr ring, std::vector<Polynomial> gens);

  const RingPtr& ring() const { return ring_; }
  bool valid() const { return ring_ != nullptr; }
  // generators as given (exact zeros dropped)
  const std::vector<Polynomial>& generators() const { return *gens_; }

  // Reduced basis under the ring's own order: monic, no term of any member
  // divisible by another member's leading term, sorted ascending by leading
  // term. Canonical, so ideal equality is decidable by comparing bases.
  const std::vector<Polynomial>& groebner_basis() const {
    return groebner_basis(ring_->order());
  }
  const std::vector<Polynomial>& groebner_basis(const MonomialOrder& order) const;

  // basis term lists sorted under `order`, shared with the cache
  std::shared_ptr<const std::vector<std::vector<Term>>> basis_terms(
      const MonomialOrder& order) const;

private:
  struct Cache;
  RingPtr ring_;
  std::shared_ptr<const std::vector<Polynomial>> gens_;
  std::shared_ptr<Cache> cache_;
};

// Fully reduced normal form of f against the cached basis of I.
Polynomial normal_form(const Polynomial& f, const IdealHandle& I);
Polynomial normal_form(const Polynomial& f, const IdealHandle& I,
                       const MonomialOrder& order);

bool ideal_membership(const Polynomial& f, const IdealHandle& I);
// J subseteq I
bool ideal_contains(const IdealHandle& I, const IdealHandle& J);
bool ideal_equal(const IdealHandle& I, const IdealHandle& J);
bool ideal_is_proper(const IdealHandle& I);
bool ideal_is_zero(const IdealHandle& I);

IdealHandle ideal_sum(const IdealHandle& I, const IdealHandle& J);
IdealHandle ideal_product(const IdealHandle& I, const IdealHandle& J);
// via one auxiliary variable t and elimination of t from t*I + (1-t)*J
IdealHandle ideal_intersection(const IdealHandle& I, const IdealHandle& J);
// (I : J) = {f : fJ subseteq I}
IdealHandle ideal_colon(const IdealHandle& I, const IdealHandle& J);
// stable limit of the chain (I : J) subseteq (I : J^2) subseteq ...
IdealHandle saturation(const IdealHandle& I, const IdealHandle& J);

// Kernel of the induced map source -> target/relations. Requires identical
// coefficient fields and identity coefficient action.
IdealHandle ring_map_kernel(const RingMap& map, const IdealHandle& target_relations);

// Dimension of (ambient ring)/I; EmptyRingError when I = (1).
std::size_t krull_dimension(const IdealHandle& I);
// dim(I + relations) == 0; false for the unit ideal
bool is_m_primary(const IdealHandle& I, const IdealHandle& relations);

// Components generated by pure variable powers whose intersection is M;
// irredundant and deterministically ordered. NotMonomialError unless every
// generator is a single term.
std::vector<IdealHandle> monomial_irreducible_decomposition(const IdealHandle& M);

// generator-wise q-th powers, q = p^e
IdealHandle bracket_power_ideal(const IdealHandle& I, unsigned e);

// exact division f / g; throws InvalidArgumentError when not exact
Polynomial poly_divexact(const Polynomial& f, const Polynomial& g);

// Extended ring with fresh variables prepended as an elimination block.
RingPtr extend_ring_front(const RingPtr& ring, std::size_t count,
                          const std::string& stem = "@t");
// Combined ring [front_vars | back_vars] with elimination of the front block.
RingPtr combine_rings_front(const RingPtr& front, const RingPtr& back,
                            const FieldPtr& field);
// Re-embeds f so its variables occupy positions [offset, offset+nvars).
Polynomial embed_at(const RingPtr& big, const Polynomial& f, std::size_t offset);
// Inverse of embed_at; requires the support to lie in that window.
Polynomial project_window(const RingPtr& small, const Polynomial& f,
                          std::size_t offset);

// Test support: every S-polynomial of the basis reduces to zero.
bool buchberger_criterion_holds(const std::vector<Polynomial>& basis,
                                const MonomialOrder& order);

}  // namespace charp

#endif
