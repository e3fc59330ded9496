#include "charp/monomial.hpp"

#include <numeric>
#include <tuple>

namespace charp {

namespace {

std::vector<unsigned> identity_perm(std::size_t n) {
  std::vector<unsigned> p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

// grevlex on the positions [lo, hi) of the permutation
int grevlex_range(const std::vector<unsigned>& perm, std::size_t lo,
                  std::size_t hi, const ExpVec& a, const ExpVec& b) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[perm[i]];
    db += b[perm[i]];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = hi; i-- > lo;) {
    std::uint32_t xa = a[perm[i]], xb = b[perm[i]];
    if (xa != xb) return xa < xb ? 1 : -1;
  }
  return 0;
}

}  // namespace

MonomialOrder MonomialOrder::lex(std::size_t n) {
  return MonomialOrder{OrderKind::Lex, identity_perm(n), 0};
}

MonomialOrder MonomialOrder::grevlex(std::size_t n) {
  return MonomialOrder{OrderKind::GrevLex, identity_perm(n), 0};
}

MonomialOrder MonomialOrder::elimination(std::size_t n, unsigned block) {
  return MonomialOrder{OrderKind::Elimination, identity_perm(n), block};
}

bool MonomialOrder::operator<(const MonomialOrder& o) const {
  return std::tie(kind, block, perm) < std::tie(o.kind, o.block, o.perm);
}

int monomial_compare(const MonomialOrder& order, const ExpVec& m1,
                     const ExpVec& m2) {
  if (m1.size() != m2.size() || m1.size() != order.perm.size())
    throw LengthMismatchError();
  switch (order.kind) {
    case OrderKind::Lex:
      for (std::size_t i = 0; i < order.perm.size(); ++i) {
        std::uint32_t a = m1[order.perm[i]], b = m2[order.perm[i]];
        if (a != b) return a > b ? 1 : -1;
      }
      return 0;
    case OrderKind::GrevLex:
      return grevlex_range(order.perm, 0, order.perm.size(), m1, m2);
    case OrderKind::Elimination: {
      int c = grevlex_range(order.perm, 0, order.block, m1, m2);
      if (c != 0) return c;
      return grevlex_range(order.perm, order.block, order.perm.size(), m1, m2);
    }
  }
  return 0;
}

}  // namespace charp
