#include "charp/polynomial.hpp"

#include <algorithm>
#include <set>

#include "charp/budget.hpp"
#include "charp/errors.hpp"

namespace charp {

PolyRing::PolyRing(FieldPtr field, std::vector<std::string> vars,
                   MonomialOrder order)
    : field_(std::move(field)), vars_(std::move(vars)), order_(std::move(order)) {
  if (order_.perm.size() != vars_.size())
    throw InvalidArgumentError("monomial order arity mismatch");
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.empty()) throw InvalidArgumentError("empty variable name");
    if (!seen.insert(v).second)
      throw InvalidArgumentError("duplicate variable name '" + v + "'");
    if (field_->parameter_index(v) >= 0)
      throw InvalidArgumentError("variable '" + v +
                                 "' collides with a field parameter");
  }
}

int PolyRing::variable_index(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

bool PolyRing::same_as(const PolyRing& o) const {
  if (this == &o) return true;
  return *field_ == *o.field_ && vars_ == o.vars_ && order_ == o.order_;
}

std::string PolyRing::to_string() const {
  std::string s = field_->to_string() + "[";
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (i) s += ",";
    s += vars_[i];
  }
  return s + "]";
}

RingPtr make_poly_ring(FieldPtr field, std::vector<std::string> vars,
                       MonomialOrder order) {
  return std::make_shared<const PolyRing>(std::move(field), std::move(vars),
                                          std::move(order));
}

RingPtr make_poly_ring(FieldPtr field, std::vector<std::string> vars) {
  MonomialOrder o = MonomialOrder::grevlex(vars.size());
  return make_poly_ring(std::move(field), std::move(vars), std::move(o));
}

Polynomial Polynomial::zero(RingPtr ring) {
  return from_terms(std::move(ring), {});
}

Polynomial Polynomial::one(RingPtr ring) {
  Scalar c = Scalar::one(ring->field());
  return constant(std::move(ring), std::move(c));
}

Polynomial Polynomial::constant(RingPtr ring, Scalar c) {
  std::vector<Term> ts;
  if (!c.is_zero()) ts.push_back(Term{ExpVec(ring->nvars(), 0), std::move(c)});
  Polynomial f;
  f.ring_ = std::move(ring);
  f.terms_ = std::move(ts);
  return f;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars())
    throw InvalidArgumentError("variable index out of range");
  ExpVec e(ring->nvars(), 0);
  e[index] = 1;
  return monomial(std::move(ring), std::move(e), Scalar());
}

Polynomial Polynomial::monomial(RingPtr ring, ExpVec exp, Scalar c) {
  if (exp.size() != ring->nvars())
    throw LengthMismatchError();
  if (c.is_null()) c = Scalar::one(ring->field());
  Polynomial f;
  f.ring_ = std::move(ring);
  if (!c.is_zero()) f.terms_.push_back(Term{std::move(exp), std::move(c)});
  return f;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const MonomialOrder& ord = ring->order();
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return monomial_compare(ord, a.exp, b.exp) > 0;
  });
  Polynomial f;
  f.ring_ = std::move(ring);
  for (auto& t : terms) {
    if (t.coeff.is_null() || t.coeff.is_zero()) continue;
    if (!f.terms_.empty() && f.terms_.back().exp == t.exp) {
      Scalar s = f.terms_.back().coeff + t.coeff;
      if (s.is_zero())
        f.terms_.pop_back();
      else
        f.terms_.back().coeff = std::move(s);
    } else {
      f.terms_.push_back(std::move(t));
    }
  }
  return f;
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].coeff.is_one() &&
         exp_total_degree(terms_[0].exp) == 0;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && exp_total_degree(terms_[0].exp) == 0);
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw InvalidArgumentError("zero polynomial has no leading term");
  return terms_.front();
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, exp_total_degree(t.exp));
  return d;
}

long long Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return 0;
  std::uint64_t d = exp_total_degree(terms_[0].exp);
  for (const auto& t : terms_)
    if (exp_total_degree(t.exp) != d) return -1;
  return static_cast<long long>(d);
}

void check_same_ring(const Polynomial& a, const Polynomial& b) {
  if (!a.ring() || !b.ring()) throw RingMismatchError("detached polynomial");
  if (!a.ring()->same_as(*b.ring())) throw RingMismatchError();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_ring(*this, o);
  const MonomialOrder& ord = ring_->order();
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = monomial_compare(ord, terms_[i].exp, o.terms_[j].exp);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      Scalar s = terms_[i].coeff + o.terms_[j].coeff;
      if (!s.is_zero()) out.push_back(Term{terms_[i].exp, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  Polynomial r;
  r.ring_ = ring_;
  r.terms_ = std::move(out);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::scale(const Scalar& c) const {
  if (c.is_zero()) return zero(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = t.coeff * c;
  return r;
}

Polynomial Polynomial::mul_term(const ExpVec& exp, const Scalar& c) const {
  if (c.is_zero()) return zero(ring_);
  // multiplying by a fixed monomial preserves the term order
  Polynomial r;
  r.ring_ = ring_;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_)
    r.terms_.push_back(Term{exp_add(t.exp, exp), t.coeff * c});
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_ring(*this, o);
  if (is_zero() || o.is_zero()) return zero(ring_);
  std::vector<Term> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& ta : terms_)
    for (const auto& tb : o.terms_)
      acc.push_back(Term{exp_add(ta.exp, tb.exp), ta.coeff * tb.coeff});
  return from_terms(ring_, std::move(acc));
}

Polynomial Polynomial::pow(std::uint64_t n) const {
  Polynomial acc = one(ring_);
  Polynomial base = *this;
  while (n) {
    if (n & 1) acc = acc * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return acc;
}

std::uint64_t power_of_char(std::uint32_t p, unsigned e) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (q > 0xffffffffull) throw OverflowError();
    q *= p;
  }
  return q;
}

Polynomial Polynomial::frobenius_power(unsigned e) const {
  if (e == 0) return *this;
  std::uint64_t q = power_of_char(ring_->field()->characteristic(), e);
  Polynomial r;
  r.ring_ = ring_;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_)
    r.terms_.push_back(Term{exp_scale(t.exp, q), t.coeff.frobenius(e)});
  // termwise map preserves strict descending order (order is multiplicative)
  return r;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= ring_->nvars()) throw InvalidArgumentError("variable index out of range");
  std::uint32_t p = ring_->field()->characteristic();
  std::vector<Term> out;
  for (const auto& t : terms_) {
    std::uint32_t k = t.exp[var];
    if (k == 0 || k % p == 0) continue;
    Term d = t;
    d.coeff = t.coeff * Scalar::from_int(ring_->field(), k % p);
    d.exp[var] = k - 1;
    out.push_back(std::move(d));
  }
  return from_terms(ring_, std::move(out));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].exp != o.terms_[i].exp) return false;
    if (terms_[i].coeff != o.terms_[i].coeff) return false;
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (!ring_) return "0";
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) s += " + ";
    const Term& t = terms_[i];
    bool has_vars = exp_total_degree(t.exp) > 0;
    bool coeff_one = t.coeff.is_one();
    bool wrote = false;
    if (!coeff_one || !has_vars) {
      std::string c = t.coeff.to_string();
      bool needs_parens =
          has_vars && (t.coeff.numerator().terms().size() > 1 ||
                       !t.coeff.denominator().is_one());
      s += needs_parens ? "(" + c + ")" : c;
      wrote = true;
    }
    for (std::size_t k = 0; k < t.exp.size(); ++k) {
      if (t.exp[k] == 0) continue;
      if (wrote) s += "*";
      s += ring_->variables()[k];
      if (t.exp[k] > 1) s += "^" + std::to_string(t.exp[k]);
      wrote = true;
    }
  }
  return s;
}

Polynomial convert_to_ring(const Polynomial& f, const RingPtr& target) {
  if (!f.ring()) return Polynomial::zero(target);
  if (f.ring()->same_as(*target)) {
    Polynomial g = Polynomial::from_terms(target, f.terms());
    return g;
  }
  if (!(*f.ring()->field() == *target->field()) ||
      f.ring()->variables() != target->variables())
    throw RingMismatchError("convert_to_ring requires identical variables");
  return Polynomial::from_terms(target, f.terms());
}

}  // namespace charp
