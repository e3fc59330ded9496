#ifndef CHARP_EXPVEC_HPP
#define CHARP_EXPVEC_HPP

#include <cstdint>
#include <vector>

#include "charp/errors.hpp"

namespace charp {

// Exponent vector of a monomial; one entry per variable.
using ExpVec = std::vector<std::uint32_t>;

inline std::uint64_t exp_total_degree(const ExpVec& e) {
  std::uint64_t d = 0;
  for (auto x : e) d += x;
  return d;
}

inline ExpVec exp_add(const ExpVec& a, const ExpVec& b) {
  if (a.size() != b.size()) throw LengthMismatchError();
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t s = std::uint64_t(a[i]) + b[i];
    if (s > 0xffffffffull) throw OverflowError();
    r[i] = static_cast<std::uint32_t>(s);
  }
  return r;
}

// a - b; requires b | a componentwise.
inline ExpVec exp_sub(const ExpVec& a, const ExpVec& b) {
  if (a.size() != b.size()) throw LengthMismatchError();
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) throw InvalidArgumentError("exponent subtraction underflow");
    r[i] = a[i] - b[i];
  }
  return r;
}

inline bool exp_divides(const ExpVec& a, const ExpVec& b) {
  // does x^a divide x^b
  if (a.size() != b.size()) throw LengthMismatchError();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline ExpVec exp_lcm(const ExpVec& a, const ExpVec& b) {
  if (a.size() != b.size()) throw LengthMismatchError();
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
  return r;
}

inline bool exp_coprime(const ExpVec& a, const ExpVec& b) {
  if (a.size() != b.size()) throw LengthMismatchError();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

inline ExpVec exp_scale(const ExpVec& a, std::uint64_t k) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t s = std::uint64_t(a[i]) * k;
    if (s > 0xffffffffull) throw OverflowError();
    r[i] = static_cast<std::uint32_t>(s);
  }
  return r;
}

// Lexicographic comparison in plain index order (used for parameter
// monomials, where the declaration order is the fixed order).
inline int exp_lex_compare(const ExpVec& a, const ExpVec& b) {
  if (a.size() != b.size()) throw LengthMismatchError();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace charp

#endif
