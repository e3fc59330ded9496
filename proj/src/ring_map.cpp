#include "charp/ring_map.hpp"

#include "charp/errors.hpp"

namespace charp {

RingMap::RingMap(RingPtr src, RingPtr tgt, std::vector<Polynomial> imgs,
                 unsigned frobenius_e)
    : source(std::move(src)), target(std::move(tgt)), images(std::move(imgs)),
      coeff_frobenius_e(frobenius_e) {
  if (images.size() != source->nvars())
    throw InvalidArgumentError("ring map needs one image per source variable");
  for (const auto& g : images)
    if (!g.ring() || !g.ring()->same_as(*target))
      throw RingMismatchError("ring map image not in target ring");
  if (source->field()->characteristic() != target->field()->characteristic())
    throw RingMismatchError("ring map across characteristics");
}

Polynomial apply_ring_map(const RingMap& map, const Polynomial& f) {
  if (!f.ring() || !f.ring()->same_as(*map.source))
    throw RingMismatchError("polynomial not in the map's source ring");
  Polynomial acc = Polynomial::zero(map.target);
  for (const auto& t : f.terms()) {
    Scalar c = promote_scalar(t.coeff, map.target->field());
    if (map.coeff_frobenius_e) c = c.frobenius(map.coeff_frobenius_e);
    Polynomial term = Polynomial::constant(map.target, std::move(c));
    for (std::size_t k = 0; k < t.exp.size(); ++k)
      if (t.exp[k] != 0) term = term * map.images[k].pow(t.exp[k]);
    acc = acc + term;
  }
  return acc;
}

}  // namespace charp
