#include "charp/param_poly.hpp"

#include <algorithm>

#include "charp/field.hpp"

namespace charp {

ParamPoly ParamPoly::zero(std::size_t width) {
  ParamPoly f;
  f.width_ = width;
  return f;
}

ParamPoly ParamPoly::constant(std::size_t width, std::uint32_t c,
                              std::uint32_t p) {
  ParamPoly f;
  f.width_ = width;
  c %= p;
  if (c != 0) f.terms_.push_back(PTerm{ExpVec(width, 0), c});
  return f;
}

ParamPoly ParamPoly::parameter(std::size_t width, std::size_t index) {
  ParamPoly f;
  f.width_ = width;
  ExpVec e(width, 0);
  e.at(index) = 1;
  f.terms_.push_back(PTerm{std::move(e), 1});
  return f;
}

ParamPoly ParamPoly::from_terms(std::size_t width, std::vector<PTerm> terms,
                                std::uint32_t p) {
  std::sort(terms.begin(), terms.end(), [](const PTerm& a, const PTerm& b) {
    return exp_lex_compare(a.exp, b.exp) > 0;
  });
  ParamPoly f;
  f.width_ = width;
  for (auto& t : terms) {
    std::uint32_t c = t.coeff % p;
    if (c == 0) continue;
    if (!f.terms_.empty() && f.terms_.back().exp == t.exp) {
      std::uint32_t s = fp_add(f.terms_.back().coeff, c, p);
      if (s == 0)
        f.terms_.pop_back();
      else
        f.terms_.back().coeff = s;
    } else {
      f.terms_.push_back(PTerm{std::move(t.exp), c});
    }
  }
  return f;
}

bool ParamPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && exp_total_degree(terms_[0].exp) == 0);
}

bool ParamPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].coeff == 1 &&
         exp_total_degree(terms_[0].exp) == 0;
}

std::uint32_t ParamPoly::leading_coeff() const {
  return terms_.empty() ? 0 : terms_.front().coeff;
}

std::uint32_t ParamPoly::constant_value() const {
  return terms_.empty() ? 0 : terms_[0].coeff;
}

std::uint64_t ParamPoly::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, exp_total_degree(t.exp));
  return d;
}

std::uint32_t ParamPoly::degree_in(std::size_t k) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exp[k]);
  return d;
}

std::string ParamPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) s += "+";
    const PTerm& t = terms_[i];
    bool has_vars = exp_total_degree(t.exp) > 0;
    bool wrote = false;
    if (t.coeff != 1 || !has_vars) {
      s += std::to_string(t.coeff);
      wrote = true;
    }
    for (std::size_t k = 0; k < t.exp.size(); ++k) {
      if (t.exp[k] == 0) continue;
      if (wrote) s += "*";
      s += names.at(k);
      if (t.exp[k] > 1) s += "^" + std::to_string(t.exp[k]);
      wrote = true;
    }
  }
  return s;
}

ParamPoly pp_add(const ParamPoly& a, const ParamPoly& b, std::uint32_t p) {
  ParamPoly r;
  r.width_ = std::max(a.width_, b.width_);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    int c = exp_lex_compare(a.terms_[i].exp, b.terms_[j].exp);
    if (c > 0) {
      r.terms_.push_back(a.terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(b.terms_[j++]);
    } else {
      std::uint32_t s = fp_add(a.terms_[i].coeff, b.terms_[j].coeff, p);
      if (s != 0) r.terms_.push_back(PTerm{a.terms_[i].exp, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
  for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
  return r;
}

ParamPoly pp_neg(const ParamPoly& a, std::uint32_t p) {
  ParamPoly r = a;
  for (auto& t : r.terms_) t.coeff = fp_neg(t.coeff, p);
  return r;
}

ParamPoly pp_sub(const ParamPoly& a, const ParamPoly& b, std::uint32_t p) {
  return pp_add(a, pp_neg(b, p), p);
}

ParamPoly pp_scale(const ParamPoly& a, std::uint32_t c, std::uint32_t p) {
  c %= p;
  if (c == 0) return ParamPoly::zero(a.width());
  ParamPoly r = a;
  for (auto& t : r.terms_) t.coeff = fp_mul(t.coeff, c, p);
  return r;
}

ParamPoly pp_mul(const ParamPoly& a, const ParamPoly& b, std::uint32_t p) {
  if (a.is_zero() || b.is_zero())
    return ParamPoly::zero(std::max(a.width(), b.width()));
  // fast path: constant factor
  if (a.is_constant()) return pp_scale(b, a.constant_value(), p);
  if (b.is_constant()) return pp_scale(a, b.constant_value(), p);
  std::vector<PTerm> acc;
  acc.reserve(a.terms().size() * b.terms().size());
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms())
      acc.push_back(PTerm{exp_add(ta.exp, tb.exp), fp_mul(ta.coeff, tb.coeff, p)});
  return ParamPoly::from_terms(std::max(a.width(), b.width()), std::move(acc), p);
}

ParamPoly pp_pow(const ParamPoly& a, std::uint64_t n, std::uint32_t p) {
  ParamPoly acc = ParamPoly::constant(a.width(), 1, p);
  ParamPoly base = a;
  while (n) {
    if (n & 1) acc = pp_mul(acc, base, p);
    n >>= 1;
    if (n) base = pp_mul(base, base, p);
  }
  return acc;
}

ParamPoly pp_frobenius(const ParamPoly& a, std::uint64_t q) {
  ParamPoly r = a;
  for (auto& t : r.terms_) t.exp = exp_scale(t.exp, q);
  return r;  // coefficients fixed: c^q = c for c in F_p
}

ParamPoly pp_monic(const ParamPoly& a, std::uint32_t p) {
  if (a.is_zero()) return a;
  std::uint32_t lc = a.leading_coeff();
  if (lc == 1) return a;
  return pp_scale(a, fp_inverse(lc, p), p);
}

ParamPoly pp_divexact(const ParamPoly& a, const ParamPoly& b, std::uint32_t p) {
  if (b.is_zero()) throw DivisionByZeroError();
  if (a.is_zero()) return ParamPoly::zero(a.width());
  if (b.is_one()) return a;
  ParamPoly rem = a;
  std::vector<PTerm> quot;
  const PTerm& blt = b.terms().front();
  std::uint32_t blc_inv = fp_inverse(blt.coeff, p);
  while (!rem.is_zero()) {
    const PTerm& rlt = rem.terms().front();
    if (!exp_divides(blt.exp, rlt.exp))
      throw InvalidArgumentError("parameter polynomial division is not exact");
    PTerm qt{exp_sub(rlt.exp, blt.exp), fp_mul(rlt.coeff, blc_inv, p)};
    ParamPoly step = pp_mul(
        b, ParamPoly::from_terms(a.width(), {qt}, p), p);
    rem = pp_sub(rem, step, p);
    quot.push_back(std::move(qt));
  }
  return ParamPoly::from_terms(a.width(), std::move(quot), p);
}

bool pp_divides(const ParamPoly& b, const ParamPoly& a, std::uint32_t p) {
  if (b.is_zero()) return a.is_zero();
  try {
    pp_divexact(a, b, p);
    return true;
  } catch (const InvalidArgumentError&) {
    return false;
  }
}

namespace {

// Coefficient of x_k^d viewed univariately in variable k (entry k zeroed).
ParamPoly coeff_in(const ParamPoly& f, std::size_t k, std::uint32_t d,
                   std::uint32_t p) {
  std::vector<PTerm> out;
  for (const auto& t : f.terms()) {
    if (t.exp[k] != d) continue;
    PTerm c = t;
    c.exp[k] = 0;
    out.push_back(std::move(c));
  }
  return ParamPoly::from_terms(f.width(), std::move(out), p);
}

// x_k^d as a ParamPoly.
ParamPoly var_power(std::size_t width, std::size_t k, std::uint32_t d,
                    std::uint32_t p) {
  ExpVec e(width, 0);
  e[k] = d;
  return ParamPoly::from_terms(width, {PTerm{std::move(e), 1}}, p);
}

// Content wrt variable k: gcd of the univariate coefficients.
ParamPoly content_in(const ParamPoly& f, std::size_t k, std::uint32_t p) {
  ParamPoly c = ParamPoly::zero(f.width());
  for (std::uint32_t d = 0; d <= f.degree_in(k); ++d) {
    ParamPoly cd = coeff_in(f, k, d, p);
    if (cd.is_zero()) continue;
    c = pp_gcd(c, cd, p);
    if (c.is_one()) break;
  }
  return c;
}

int first_variable(const ParamPoly& f) {
  int best = -1;
  for (const auto& t : f.terms())
    for (std::size_t k = 0; k < t.exp.size(); ++k)
      if (t.exp[k] != 0 && (best < 0 || static_cast<int>(k) < best))
        best = static_cast<int>(k);
  return best;
}

// One pseudo-reduction pass in variable k: returns a polynomial proportional
// to prem(a, b) wrt x_k. Proportionality constants are irrelevant because the
// caller takes primitive parts.
ParamPoly pseudo_rem(ParamPoly a, const ParamPoly& b, std::size_t k,
                     std::uint32_t p) {
  std::uint32_t db = b.degree_in(k);
  ParamPoly lcb = coeff_in(b, k, db, p);
  while (!a.is_zero() && a.degree_in(k) >= db) {
    std::uint32_t da = a.degree_in(k);
    ParamPoly lca = coeff_in(a, k, da, p);
    ParamPoly shift = var_power(a.width(), k, da - db, p);
    a = pp_sub(pp_mul(a, lcb, p), pp_mul(pp_mul(lca, shift, p), b, p), p);
  }
  return a;
}

}  // namespace

ParamPoly pp_gcd(const ParamPoly& a, const ParamPoly& b, std::uint32_t p) {
  if (a.is_zero()) return pp_monic(b, p);
  if (b.is_zero()) return pp_monic(a, p);
  if (a.is_constant() || b.is_constant())
    return ParamPoly::constant(std::max(a.width(), b.width()), 1, p);

  int ka = first_variable(a);
  int kb = first_variable(b);
  std::size_t k = static_cast<std::size_t>(std::min(ka, kb));

  ParamPoly ca = content_in(a, k, p);
  ParamPoly cb = content_in(b, k, p);
  ParamPoly fa = pp_divexact(a, ca, p);
  ParamPoly fb = pp_divexact(b, cb, p);
  ParamPoly c = pp_gcd(ca, cb, p);

  // primitive PRS in variable k
  if (fa.degree_in(k) < fb.degree_in(k)) std::swap(fa, fb);
  ParamPoly g;
  for (;;) {
    if (fb.degree_in(k) == 0) {
      // fb is primitive wrt k and free of x_k, hence a unit times content 1
      g = ParamPoly::constant(a.width(), 1, p);
      break;
    }
    ParamPoly r = pseudo_rem(fa, fb, k, p);
    if (r.is_zero()) {
      g = fb;
      break;
    }
    fa = fb;
    fb = pp_divexact(r, content_in(r, k, p), p);
  }
  return pp_monic(pp_mul(c, g, p), p);
}

}  // namespace charp
