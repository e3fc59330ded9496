#include "charp/frobenius.hpp"

#include <algorithm>

#include "charp/errors.hpp"

namespace charp {

QuotientIdeal bracket_power(const QuotientIdeal& I, unsigned e) {
  if (e == 0) return I;
  std::vector<Polynomial> gens;
  gens.reserve(I.generators().size());
  for (const auto& g : I.generators()) gens.push_back(g.frobenius_power(e));
  return QuotientIdeal(I.ring(), std::move(gens));
}

IdealHandle frobenius_preimage(const IdealHandle& K, unsigned e) {
  if (!K.ring()->field()->prime_field()) throw NonPerfectCoefficientsError();
  if (e == 0) return K;
  const RingPtr& S = K.ring();
  std::uint64_t q = power_of_char(S->field()->characteristic(), e);
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < S->nvars(); ++i)
    images.push_back(Polynomial::variable(S, i).pow(q));
  RingMap frob(S, S, std::move(images));
  return ring_map_kernel(frob, K);
}

Verdict frobenius_membership(const Polynomial& x, const QuotientIdeal& I,
                             unsigned emax) {
  Verdict v;
  v.explored_emax = static_cast<int>(emax);
  for (unsigned e = 0; e <= emax; ++e) {
    QuotientIdeal Ie = bracket_power(I, e);
    Polynomial xe = x.frobenius_power(e);
    if (Ie.contains(xe)) {
      v.status = Status::In;
      v.certificate_exponent = e;
      v.certificate.push_back(MembershipFact{
          "x^(p^" + std::to_string(e) + ") in I^[p^" + std::to_string(e) + "]",
          xe, Ie.lift(), true});
      v.narrative = "frobenius membership certified at e=" + std::to_string(e);
      return v;
    }
  }
  v.status = Status::Unknown;
  v.narrative = "no exponent e <= " + std::to_string(emax) +
                " with x^(p^e) in I^[p^e]; membership in the closure is not "
                "refuted by finitely many failures";
  return v;
}

ClosureChain frobenius_closure(const QuotientIdeal& I, unsigned emax,
                               unsigned window) {
  if (!I.ring()->ambient()->field()->prime_field())
    throw NonPerfectCoefficientsError();
  ClosureChain chain;
  chain.base = I;
  chain.window = window;
  unsigned run = 1;  // consecutive equal entries ending at the last one
  chain.entries.emplace_back(0u, I);
  for (unsigned e = 1; e <= emax; ++e) {
    IdealHandle K = bracket_power(I, e).lift();
    IdealHandle pre = frobenius_preimage(K, e);
    QuotientIdeal Ce(I.ring(), pre.generators());
    if (!Ce.contains_ideal(chain.entries.back().second))
      throw InvalidArgumentError("closure chain is not ascending");
    bool same = Ce.equals(chain.entries.back().second);
    chain.entries.emplace_back(e, std::move(Ce));
    run = same ? run + 1 : 1;
    if (run >= window + 1) {
      chain.stable = true;
      break;
    }
  }
  return chain;
}

std::vector<Polynomial> closure_probes(const QuotientIdeal& I,
                                       const ClosedParams& params) {
  const RingPresPtr& R = I.ring();
  std::vector<Polynomial> pool;
  for (const auto& p : params.probes) pool.push_back(R->reduce(p));
  for (const auto& g : I.generators())
    for (std::size_t i = 0; i < R->ambient()->nvars(); ++i)
      pool.push_back(R->reduce(g * Polynomial::variable(R->ambient(), i)));
  for (const auto& m : normal_monomials(R, params.probe_degree))
    pool.push_back(m);
  std::vector<Polynomial> out;
  for (const auto& f : pool) {
    if (f.is_zero() || f.is_constant()) continue;
    if (I.contains(f)) continue;
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  }
  return out;
}

namespace {

// OUT verdict from a witness x with x^(p^e) in I^[p^e] but x notin I
Verdict witness_verdict(const QuotientIdeal& I, const Polynomial& x,
                        unsigned emax, const std::string& route) {
  Verdict v;
  for (unsigned e = 1; e <= emax; ++e) {
    QuotientIdeal Ie = bracket_power(I, e);
    Polynomial xe = x.frobenius_power(e);
    if (Ie.contains(xe)) {
      v.status = Status::Out;
      v.witness = x;
      v.witness_exponent = e;
      v.explored_emax = static_cast<int>(e);
      v.certificate.push_back(MembershipFact{"witness not in I", x, I.lift(), false});
      v.certificate.push_back(MembershipFact{
          "witness^(p^" + std::to_string(e) + ") in I^[p^" + std::to_string(e) + "]",
          xe, Ie.lift(), true});
      v.narrative = "not Frobenius closed (" + route + "): witness (" +
                    x.to_string() + ", e=" + std::to_string(e) + ")";
      return v;
    }
  }
  v.status = Status::Unknown;
  return v;
}

}  // namespace

Verdict is_frobenius_closed(const QuotientIdeal& I, const ClosedParams& params) {
  const bool prime = I.ring()->ambient()->field()->prime_field();

  // user probes first: they give the sharpest witnesses and work over any
  // coefficient field
  for (const auto& probe : params.probes) {
    Polynomial x = I.ring()->reduce(probe);
    if (x.is_zero() || I.contains(x)) continue;
    Verdict w = witness_verdict(I, x, params.emax, "probe");
    if (w.out()) return w;
  }

  if (prime) {
    ClosureChain chain = frobenius_closure(I, params.emax, params.window);
    for (const auto& [e, Ce] : chain.entries) {
      if (Ce.equals(I)) continue;
      // the chain grew: pick a generator of C_e outside I as the witness
      for (const auto& g : Ce.lift().groebner_basis()) {
        if (I.contains(g)) continue;
        Verdict w = witness_verdict(I, g, std::max(params.emax, e), "chain");
        if (w.out()) return w;
      }
    }
    Verdict v;
    v.explored_emax = static_cast<int>(chain.entries.back().first);
    if (chain.stable) {
      v.status = Status::In;
      v.narrative = "Frobenius closed: chain stable at I (window-certified, w=" +
                    std::to_string(params.window) + ")";
      for (const auto& g : chain.candidate().generators())
        v.certificate.push_back(
            MembershipFact{"candidate generator in I", g, I.lift(), true});
    } else {
      v.status = Status::Unknown;
      v.narrative = "chain did not stabilize within emax=" +
                    std::to_string(params.emax);
    }
    return v;
  }

  // parameter field: element-level probing only
  std::vector<Polynomial> probes = closure_probes(I, params);
  for (const auto& x : probes) {
    Verdict w = witness_verdict(I, x, params.emax, "probe");
    if (w.out()) return w;
  }
  Verdict v;
  v.status = Status::In;
  v.explored_emax = static_cast<int>(params.emax);
  v.narrative = "no witness among " + std::to_string(probes.size()) +
                " probes (degree <= " + std::to_string(params.probe_degree) +
                ", emax=" + std::to_string(params.emax) +
                "); probe evidence over a non-perfect coefficient field";
  return v;
}

BracketCommuteReport bracket_commute_check(const QuotientIdeal& q,
                                           unsigned emax, unsigned window) {
  if (!q.ring()->ambient()->field()->prime_field())
    throw NonPerfectCoefficientsError();
  BracketCommuteReport rep;
  rep.lhs_chain = frobenius_closure(q, emax, window);
  QuotientIdeal q_bracket = bracket_power(q, 1);
  rep.rhs_chain = frobenius_closure(q_bracket, emax, window);
  rep.lhs = bracket_power(rep.lhs_chain.candidate(), 1);
  rep.rhs = rep.rhs_chain.candidate();
  rep.pass = rep.lhs.equals(rep.rhs);
  rep.certified = rep.lhs_chain.stable && rep.rhs_chain.stable;
  return rep;
}

}  // namespace charp
