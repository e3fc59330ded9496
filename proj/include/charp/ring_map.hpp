#ifndef CHARP_RING_MAP_HPP
#define CHARP_RING_MAP_HPP

#include "charp/polynomial.hpp"

namespace charp {

// Ring homomorphism between ambient polynomial rings: one target image per
// source variable, with the coefficient field mapped by the identity or by a
// Frobenius power. Quotient-level maps compose this with reduction.
struct RingMap {
  RingPtr source;
  RingPtr target;
  std::vector<Polynomial> images;
  unsigned coeff_frobenius_e = 0;

  RingMap(RingPtr src, RingPtr tgt, std::vector<Polynomial> imgs,
          unsigned frobenius_e = 0);
};

Polynomial apply_ring_map(const RingMap& map, const Polynomial& f);

}  // namespace charp

#endif
