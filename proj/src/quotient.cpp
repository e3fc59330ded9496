#include "charp/quotient.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "charp/errors.hpp"

namespace charp {

RingPresPtr RingPresentation::make(RingPtr ambient, IdealHandle relations) {
  if (!relations.valid()) relations = IdealHandle(ambient, {});
  if (!relations.ring()->same_as(*ambient))
    throw RingMismatchError("relations not in the ambient ring");
  if (!ideal_is_proper(relations)) throw UnitRelationError();
  std::size_t dim = krull_dimension(relations);
  return RingPresPtr(
      new RingPresentation(std::move(ambient), std::move(relations), dim));
}

RingPresPtr RingPresentation::polynomial(RingPtr ambient) {
  IdealHandle zero(ambient, {});
  return make(std::move(ambient), std::move(zero));
}

Polynomial RingPresentation::reduce(const Polynomial& f) const {
  return normal_form(f, relations_);
}

bool RingPresentation::elements_equal(const Polynomial& f,
                                      const Polynomial& g) const {
  return reduce(f - g).is_zero();
}

bool RingPresentation::is_zero_in_ring(const Polynomial& f) const {
  return reduce(f).is_zero();
}

IdealHandle RingPresentation::max_ideal_lift() const {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ambient_->nvars(); ++i)
    vars.push_back(Polynomial::variable(ambient_, i));
  return IdealHandle(ambient_, std::move(vars));
}

std::string RingPresentation::to_string() const {
  if (!has_relations()) return ambient_->to_string();
  std::string s = ambient_->to_string() + "/(";
  const auto& gens = relations_.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ", ";
    s += gens[i].to_string();
  }
  return s + ")";
}

RingPresPtr quotient_ring(RingPtr ambient, IdealHandle relations) {
  return RingPresentation::make(std::move(ambient), std::move(relations));
}

QuotientIdeal::QuotientIdeal(RingPresPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)) {
  for (auto& g : gens) {
    if (!g.ring() || !g.ring()->same_as(*ring_->ambient()))
      throw RingMismatchError("generator not in the ambient ring");
    gens_.push_back(std::move(g));
  }
  std::vector<Polynomial> lift_gens = gens_;
  for (const auto& r : ring_->relations().generators())
    lift_gens.push_back(r);
  lift_ = IdealHandle(ring_->ambient(), std::move(lift_gens));
}

bool QuotientIdeal::contains(const Polynomial& f) const {
  return normal_form(f, lift_).is_zero();
}

bool QuotientIdeal::equals(const QuotientIdeal& o) const {
  return ideal_equal(lift_, o.lift_);
}

bool QuotientIdeal::contains_ideal(const QuotientIdeal& o) const {
  return ideal_contains(lift_, o.lift_);
}

bool QuotientIdeal::is_proper() const { return ideal_is_proper(lift_); }

std::string QuotientIdeal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].to_string();
  }
  return s + ")";
}

namespace {

void check_same_presentation(const QuotientIdeal& a, const QuotientIdeal& b) {
  if (!a.valid() || !b.valid() || a.ring() == nullptr || b.ring() == nullptr)
    throw InvalidArgumentError("invalid quotient ideal");
  if (a.ring() != b.ring() &&
      !(a.ring()->ambient()->same_as(*b.ring()->ambient()) &&
        ideal_equal(a.ring()->relations(), b.ring()->relations())))
    throw RingMismatchError("quotient ideals in different presentations");
}

}  // namespace

QuotientIdeal quotient_ideal_sum(const QuotientIdeal& a, const QuotientIdeal& b) {
  check_same_presentation(a, b);
  std::vector<Polynomial> gens = a.generators();
  for (const auto& g : b.generators()) gens.push_back(g);
  return QuotientIdeal(a.ring(), std::move(gens));
}

QuotientIdeal quotient_ideal_product(const QuotientIdeal& a,
                                     const QuotientIdeal& b) {
  check_same_presentation(a, b);
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return QuotientIdeal(a.ring(), std::move(gens));
}

QuotientIdeal quotient_ideal_intersection(const QuotientIdeal& a,
                                          const QuotientIdeal& b) {
  check_same_presentation(a, b);
  IdealHandle inter = ideal_intersection(a.lift(), b.lift());
  return QuotientIdeal(a.ring(), inter.generators());
}

QuotientIdeal quotient_ideal_colon(const QuotientIdeal& a,
                                   const QuotientIdeal& b) {
  check_same_presentation(a, b);
  // J subseteq lift(a) makes the ambient colon compute the colon in R
  IdealHandle c = ideal_colon(a.lift(), b.lift());
  return QuotientIdeal(a.ring(), c.generators());
}

QuotientIdeal max_ideal(const RingPresPtr& R) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < R->ambient()->nvars(); ++i)
    vars.push_back(Polynomial::variable(R->ambient(), i));
  return QuotientIdeal(R, std::move(vars));
}

bool is_regular_sequence(const std::vector<Polynomial>& xs,
                         const RingPresPtr& R) {
  std::vector<Polynomial> acc = R->relations().generators();
  for (const auto& x : xs) {
    if (R->is_zero_in_ring(x)) return false;
    IdealHandle A(R->ambient(), acc);
    IdealHandle C = ideal_colon(A, IdealHandle(R->ambient(), {x}));
    if (!ideal_equal(C, A)) return false;
    acc.push_back(x);
  }
  return ideal_is_proper(IdealHandle(R->ambient(), acc));
}

bool is_filter_regular_sequence(const std::vector<Polynomial>& xs,
                                const RingPresPtr& R) {
  std::vector<Polynomial> acc = R->relations().generators();
  IdealHandle m = R->max_ideal_lift();
  for (const auto& x : xs) {
    IdealHandle A(R->ambient(), acc);
    IdealHandle C = ideal_colon(A, IdealHandle(R->ambient(), {x}));
    IdealHandle sat = saturation(A, m);
    if (!ideal_contains(sat, C)) return false;
    acc.push_back(x);
  }
  return true;
}

bool is_system_of_parameters(const std::vector<Polynomial>& xs,
                             const RingPresPtr& R) {
  std::size_t d = R->dimension();
  if (xs.size() > d) throw TooManyElementsError(xs.size(), d);
  std::vector<Polynomial> acc = R->relations().generators();
  std::size_t expected = d;
  for (const auto& x : xs) {
    acc.push_back(x);
    expected -= 1;
    IdealHandle A(R->ambient(), acc);
    if (!ideal_is_proper(A)) return false;
    if (krull_dimension(A) != expected) return false;
  }
  return true;
}

bool is_parameter_ideal(const QuotientIdeal& q) {
  return is_system_of_parameters(q.generators(), q.ring());
}

Polynomial SubringPresentation::contract(const Polynomial& s) const {
  const std::size_t ns = source->ambient()->nvars();
  Polynomial lifted = embed_at(combined, s, 0);
  Polynomial nf = normal_form(lifted, graph);
  for (const auto& t : nf.terms())
    for (std::size_t k = 0; k < ns; ++k)
      if (t.exp[k] != 0) throw NotInSubringError(s.to_string());
  return project_window(presentation_ring, nf, ns);
}

RingMap SubringPresentation::embedding() const {
  return RingMap(presentation_ring, source->ambient(), generators);
}

SubringPresentation subring_presentation(const RingPresPtr& R,
                                         std::vector<Polynomial> gens,
                                         std::vector<std::string> names) {
  if (gens.empty()) throw InvalidArgumentError("no subring generators");
  for (const auto& g : gens) {
    if (!g.ring() || !g.ring()->same_as(*R->ambient()))
      throw RingMismatchError("subring generator outside the ambient ring");
    if (R->is_zero_in_ring(g))
      throw InvalidArgumentError("subring generator is zero in the ring");
  }
  if (names.empty()) {
    std::set<std::string> used(R->ambient()->variables().begin(),
                               R->ambient()->variables().end());
    for (const auto& pn : R->ambient()->field()->parameters()) used.insert(pn);
    for (char c = 'a'; c <= 'z' && names.size() < gens.size(); ++c) {
      std::string cand(1, c);
      if (!used.count(cand)) names.push_back(cand);
    }
    for (std::size_t i = 0; names.size() < gens.size(); ++i)
      names.push_back("g" + std::to_string(i));
  }
  if (names.size() != gens.size())
    throw InvalidArgumentError("one name per subring generator required");

  SubringPresentation P;
  P.source = R;
  P.generators = gens;
  P.presentation_ring = make_poly_ring(R->ambient()->field(), names);

  const std::size_t ns = R->ambient()->nvars();
  // combined ring keeps the original S names in front so contraction output
  // reads in the presentation variables
  std::vector<std::string> combined_vars = R->ambient()->variables();
  for (const auto& n : names) combined_vars.push_back(n);
  RingPtr W = make_poly_ring(
      R->ambient()->field(), combined_vars,
      MonomialOrder::elimination(combined_vars.size(), static_cast<unsigned>(ns)));
  P.combined = W;

  std::vector<Polynomial> graph_gens;
  for (const auto& r : R->relations().generators())
    graph_gens.push_back(embed_at(W, r, 0));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Polynomial ti = Polynomial::variable(W, ns + i);
    graph_gens.push_back(ti - embed_at(W, gens[i], 0));
  }
  P.graph = IdealHandle(W, std::move(graph_gens));

  std::vector<Polynomial> kernel_gens;
  for (const auto& b : P.graph.groebner_basis()) {
    bool uses_source = false;
    for (const auto& t : b.terms())
      for (std::size_t k = 0; k < ns && !uses_source; ++k)
        if (t.exp[k] != 0) uses_source = true;
    if (!uses_source)
      kernel_gens.push_back(project_window(P.presentation_ring, b, ns));
  }
  P.kernel = IdealHandle(P.presentation_ring, std::move(kernel_gens));
  P.presented = ideal_is_zero(P.kernel)
                    ? RingPresentation::polynomial(P.presentation_ring)
                    : quotient_ring(P.presentation_ring, P.kernel);
  return P;
}

std::vector<Polynomial> normal_monomials(const RingPresPtr& R, unsigned maxdeg) {
  const RingPtr& S = R->ambient();
  std::vector<ExpVec> lts;
  for (const auto& g : R->relations().groebner_basis())
    lts.push_back(g.leading_term().exp);
  std::vector<Polynomial> out;
  ExpVec cur(S->nvars(), 0);
  // depth-first enumeration of exponent vectors of total degree <= maxdeg
  std::function<void(std::size_t, unsigned)> walk = [&](std::size_t k,
                                                        unsigned used) {
    bool divisible = false;
    for (const auto& l : lts)
      if (exp_divides(l, cur)) {
        divisible = true;
        break;
      }
    if (divisible) return;  // every extension stays divisible
    if (k == S->nvars()) {
      out.push_back(Polynomial::monomial(S, cur, Scalar::one(S->field())));
      return;
    }
    for (unsigned e = 0; e + used <= maxdeg; ++e) {
      cur[k] = e;
      walk(k + 1, used + e);
    }
    cur[k] = 0;
  };
  walk(0, 0);
  return out;
}

SubringPresentation veronese_presentation(const RingPresPtr& R, unsigned degree) {
  if (degree == 0) throw InvalidArgumentError("veronese degree must be positive");
  for (const auto& r : R->relations().generators())
    if (r.homogeneous_degree() < 0)
      throw InvalidArgumentError(
          "veronese subring requires homogeneous relations");
  std::vector<Polynomial> gens;
  for (auto& m : normal_monomials(R, degree))
    if (m.total_degree() == degree) gens.push_back(std::move(m));
  if (gens.empty()) throw InvalidArgumentError("no degree-d normal monomials");
  // deterministic naming order: descending graded-lex
  MonomialOrder lexo = MonomialOrder::lex(R->ambient()->nvars());
  std::sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
    return monomial_compare(lexo, a.leading_term().exp, b.leading_term().exp) > 0;
  });
  return subring_presentation(R, std::move(gens));
}

}  // namespace charp
