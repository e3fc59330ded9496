#ifndef CHARP_MONOMIAL_HPP
#define CHARP_MONOMIAL_HPP

#include <vector>

#include "charp/expvec.hpp"

namespace charp {

enum class OrderKind { Lex, GrevLex, Elimination };

// Total, multiplicative, well-founded order on exponent vectors. `perm` lists
// variable indices from greatest to least; an Elimination order compares the
// first `block` positions (grevlex) before the rest (grevlex), so the block
// variables can be eliminated by discarding basis elements that involve them.
struct MonomialOrder {
  OrderKind kind = OrderKind::GrevLex;
  std::vector<unsigned> perm;
  unsigned block = 0;

  static MonomialOrder lex(std::size_t nvars);
  static MonomialOrder grevlex(std::size_t nvars);
  static MonomialOrder elimination(std::size_t nvars, unsigned block);

  bool operator==(const MonomialOrder& o) const {
    return kind == o.kind && perm == o.perm && block == o.block;
  }
  bool operator!=(const MonomialOrder& o) const { return !(*this == o); }
  bool operator<(const MonomialOrder& o) const;  // map key
};

// Three-way comparison: positive when m1 > m2.
int monomial_compare(const MonomialOrder& order, const ExpVec& m1,
                     const ExpVec& m2);

}  // namespace charp

#endif
