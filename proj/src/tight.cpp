#include "charp/tight.hpp"

#include <algorithm>

#include "charp/errors.hpp"

namespace charp {

std::string layer_result_string(LayerResult r) {
  switch (r) {
    case LayerResult::Holds: return "HOLDS";
    case LayerResult::Fails: return "FAILS";
    case LayerResult::Undetermined: return "UNDETERMINED";
  }
  return "UNDETERMINED";
}

MultiplierCertificate make_multiplier(const RingPresPtr& R, const Polynomial& c,
                                      MultiplierCertificate::TestStatus status) {
  Polynomial reduced = R->reduce(c);
  if (reduced.is_zero())
    throw InadmissibleMultiplierError("multiplier is zero in the ring");
  MultiplierCertificate cert;
  cert.element = c;
  cert.status = status;
  const auto& rels = R->relations().generators();
  if (rels.empty()) {
    // polynomial ring is a domain: R° = R \ {0}
    cert.admissibility = MultiplierCertificate::Admissibility::PrincipalVerified;
    cert.note = "nonzero in a domain";
  } else if (rels.size() == 1) {
    // minimal primes come from factors of the relation; ((f) : c) = (f)
    // exactly when c shares none of them
    IdealHandle f(R->ambient(), {rels[0]});
    IdealHandle colon = ideal_colon(f, IdealHandle(R->ambient(), {c}));
    if (!ideal_equal(colon, f))
      throw InadmissibleMultiplierError(
          "multiplier shares a factor with the relation " +
          rels[0].to_string());
    cert.admissibility = MultiplierCertificate::Admissibility::PrincipalVerified;
    cert.note = "no common factor with the principal relation";
  } else {
    cert.admissibility = MultiplierCertificate::Admissibility::UserAsserted;
    cert.note = "admissibility asserted (non-principal presentation)";
  }
  return cert;
}

std::vector<MultiplierCertificate> jacobian_test_element_candidates(
    const RingPresPtr& R) {
  std::vector<MultiplierCertificate> out;
  for (const auto& rel : R->relations().generators()) {
    for (std::size_t k = 0; k < R->ambient()->nvars(); ++k) {
      Polynomial d = R->reduce(rel.derivative(k));
      if (d.is_zero()) continue;
      bool dup = false;
      for (const auto& seen : out)
        if (seen.element == d) dup = true;
      if (dup) continue;
      try {
        MultiplierCertificate cert = make_multiplier(
            R, d, MultiplierCertificate::TestStatus::JacobianDerived);
        cert.note = "jacobian-derived; valid for a reduced equidimensional "
                    "affine presentation (" + cert.note + ")";
        out.push_back(std::move(cert));
      } catch (const InadmissibleMultiplierError&) {
        // partial lies in a minimal prime; not a multiplier candidate
      }
    }
  }
  if (out.empty()) throw EmptyJacobianError();
  return out;
}

Verdict tight_membership(const Polynomial& x, const QuotientIdeal& I,
                         const MultiplierCertificate& c, unsigned emax) {
  // Frobenius route first: I subseteq I^F subseteq I^*
  Verdict frob = frobenius_membership(x, I, emax);
  if (frob.in()) {
    frob.narrative = "tight membership via Frobenius closure: " + frob.narrative;
    return frob;
  }

  Verdict v;
  v.explored_emax = static_cast<int>(emax);
  const RingPresPtr& R = I.ring();
  Polynomial cx = R->reduce(c.element);

  // evidence loop: c * x^(p^e) in I^[p^e] for e = 0..emax. A failure refutes
  // only for a test element, and only for e >= 1 (the conservative reading of
  // the test-element property).
  bool all_pass = true;
  for (unsigned e = 0; e <= emax; ++e) {
    QuotientIdeal Ie = bracket_power(I, e);
    Polynomial probe = cx * x.frobenius_power(e);
    bool holds = Ie.contains(probe);
    v.certificate.push_back(MembershipFact{
        "c*x^(p^" + std::to_string(e) + ") in I^[p^" + std::to_string(e) + "]",
        probe, Ie.lift(), holds});
    if (!holds) {
      all_pass = false;
      if (c.can_refute() && e >= 1) {
        v.status = Status::Out;
        v.refuting_multiplier = c.element;
        v.witness_exponent = e;
        v.explored_emax = static_cast<int>(e);
        v.narrative = "refuted by test element c=" + c.element.to_string() +
                      " at e=" + std::to_string(e);
        return v;
      }
    }
  }
  v.status = Status::Unknown;
  if (all_pass) {
    v.narrative = "positive evidence: c*x^(p^e) in I^[p^e] for every e <= " +
                  std::to_string(emax) + " with c=" + c.element.to_string() +
                  "; no refutation and no Frobenius certificate";
  } else {
    v.narrative = c.can_refute()
                      ? "membership failed only at e=0; refutation requires "
                        "e >= 1, range exhausted"
                      : "membership failed for a multiplier without "
                        "test-element status; refutes nothing";
  }
  return v;
}

Verdict special_part_membership(const Polynomial& x, const QuotientIdeal& I,
                                unsigned emax) {
  const RingPresPtr& R = I.ring();
  QuotientIdeal m = max_ideal(R);
  for (unsigned e1 = 0; e1 <= emax; ++e1) {
    QuotientIdeal inner = quotient_ideal_product(m, bracket_power(I, e1));
    Polynomial xq1 = x.frobenius_power(e1);
    Verdict frob = frobenius_membership(xq1, inner, emax);
    if (frob.in()) {
      Verdict v;
      v.status = Status::In;
      v.certificate_exponent = e1;
      v.explored_emax = static_cast<int>(emax);
      v.certificate = frob.certificate;
      v.narrative = "x^(q1) in (m I^[q1])^F subseteq (m I^[q1])^* at q1=p^" +
                    std::to_string(e1) + "; " + frob.narrative;
      return v;
    }
  }
  Verdict v;
  v.status = Status::Unknown;
  v.explored_emax = static_cast<int>(emax);
  v.narrative = "no q1 = p^(e1), e1 <= " + std::to_string(emax) +
                " certified x^(q1) in (m I^[q1])^*; the inner tight closure "
                "is not refutable generically";
  return v;
}

namespace {

// factor-closure candidates: the chain candidate over prime fields, the
// ideal itself over parameter fields (probe evidence only)
QuotientIdeal closure_candidate(const QuotientIdeal& I, const ClosedParams& p,
                                bool prime_field) {
  if (!prime_field) return I;
  return frobenius_closure(I, p.emax, p.window).candidate();
}

}  // namespace

ProductIdentityReport product_identity_check(
    const QuotientIdeal& q1, const QuotientIdeal& q2,
    const std::optional<MultiplierCertificate>& mult,
    const ClosedParams& params) {
  ProductIdentityReport rep;
  const RingPresPtr& R = q1.ring();
  const bool prime = R->ambient()->field()->prime_field();

  rep.q1_subseteq_q2 = q2.contains_ideal(q1);
  rep.q2_subseteq_q1 = q1.contains_ideal(q2);
  rep.hypothesis_flagged = !rep.q1_subseteq_q2;
  try {
    rep.q1_parameter = is_parameter_ideal(q1);
  } catch (const TooManyElementsError&) {
    rep.q1_parameter = false;
  }
  try {
    rep.q2_parameter = is_parameter_ideal(q2);
  } catch (const TooManyElementsError&) {
    rep.q2_parameter = false;
  }

  QuotientIdeal product = quotient_ideal_product(q1, q2);
  rep.q1_closed = is_frobenius_closed(q1, params);
  rep.q2_closed = is_frobenius_closed(q2, params);
  rep.product_closed = is_frobenius_closed(product, params);

  if (prime) {
    QuotientIdeal f1 = closure_candidate(q1, params, true);
    QuotientIdeal f2 = closure_candidate(q2, params, true);
    QuotientIdeal f12 = closure_candidate(product, params, true);
    QuotientIdeal rhs = quotient_ideal_product(f1, f2);
    bool equal = f12.equals(rhs);
    rep.frobenius_equality = equal ? LayerResult::Holds : LayerResult::Fails;
    rep.frobenius_method = "full chains (prime field)";
  } else {
    if (rep.product_closed.out() && rep.q1_closed.in() && rep.q2_closed.in()) {
      rep.frobenius_equality = LayerResult::Fails;
      rep.frobenius_method =
          "witness route: (q1q2)^F properly contains q1q2 while the factors "
          "are probe-closed, so the identity fails at the Frobenius level";
    } else if (rep.product_closed.in() && rep.q1_closed.in() &&
               rep.q2_closed.in()) {
      rep.frobenius_equality = LayerResult::Holds;
      rep.frobenius_method = "probe evidence (parameter field)";
    } else {
      rep.frobenius_equality = LayerResult::Undetermined;
      rep.frobenius_method = "probe evidence inconclusive";
    }
  }

  // decomposition route for monomial products in polynomial presentations
  if (!R->has_relations()) {
    bool monomial = true;
    for (const auto& g : product.generators())
      if (!g.is_monomial()) monomial = false;
    if (monomial && !product.generators().empty()) {
      rep.decomposition_checked = true;
      auto comps = monomial_irreducible_decomposition(product.lift());
      rep.decomposition_components = comps.size();
      IdealHandle inter = comps.empty() ? product.lift() : comps[0];
      for (std::size_t i = 1; i < comps.size(); ++i)
        inter = ideal_intersection(inter, comps[i]);
      rep.decomposition_valid = ideal_equal(inter, product.lift());
    }
  }

  // tight layer: every Frobenius witness of the product is a certified
  // member of (q1q2)^*; compare against the factor-closure product
  std::vector<Polynomial> witnesses;
  if (rep.product_closed.out() && rep.product_closed.witness)
    witnesses.push_back(*rep.product_closed.witness);
  QuotientIdeal factor_product = quotient_ideal_product(
      closure_candidate(q1, params, prime), closure_candidate(q2, params, prime));
  MultiplierCertificate c =
      mult ? *mult
           : MultiplierCertificate{Polynomial::one(R->ambient()),
                                   MultiplierCertificate::Admissibility::UserAsserted,
                                   MultiplierCertificate::TestStatus::None,
                                   "default multiplier 1 (no test status)"};
  for (const auto& w : witnesses) {
    TightProbe probe;
    probe.element = w;
    probe.in_product_star = tight_membership(w, product, c, params.emax);
    probe.in_factor_closure_product = factor_product.contains(w);
    rep.tight_evidence.push_back(std::move(probe));
  }
  std::sort(rep.tight_evidence.begin(), rep.tight_evidence.end(),
            [](const TightProbe& a, const TightProbe& b) {
              return a.element.to_string() < b.element.to_string();
            });
  return rep;
}

BriansonSkodaReport briancon_skoda_check(const QuotientIdeal& q,
                                         const MultiplierCertificate& c,
                                         const ClosedParams& params) {
  BriansonSkodaReport rep;
  const RingPresPtr& R = q.ring();
  const bool prime = R->ambient()->field()->prime_field();
  try {
    rep.q_parameter = is_parameter_ideal(q);
  } catch (const TooManyElementsError&) {
    rep.q_parameter = false;
  }

  QuotientIdeal q2 = quotient_ideal_product(q, q);
  std::vector<Polynomial> probes;

  if (prime) {
    ClosureChain chain = frobenius_closure(q2, params.emax, params.window);
    bool contained = true;
    for (const auto& g : chain.candidate().generators())
      if (!q.contains(g)) contained = false;
    rep.surrogate = contained ? LayerResult::Holds : LayerResult::Fails;
    rep.surrogate_method =
        std::string("(q^2)^F computed by chain (") +
        (chain.stable ? "window-stable" : "not stabilized") + ")";
    if (!chain.stable && contained) rep.surrogate = LayerResult::Undetermined;
    for (const auto& g : chain.candidate().generators()) probes.push_back(g);
  } else {
    bool contained = true;
    for (const auto& x : closure_probes(q2, params)) {
      probes.push_back(x);
      for (unsigned e = 1; e <= params.emax && contained; ++e) {
        if (bracket_power(q2, e).contains(x.frobenius_power(e)) &&
            !q.contains(x))
          contained = false;
      }
    }
    rep.surrogate = contained ? LayerResult::Holds : LayerResult::Fails;
    rep.surrogate_method = "probe evidence (parameter field)";
  }

  // tight evidence: certified members of (q^2)^* must land in q
  for (const auto& g : probes) {
    TightProbe probe;
    probe.element = g;
    probe.in_product_star = tight_membership(g, q2, c, params.emax);
    probe.in_factor_closure_product = q.contains(g);
    if (probe.in_product_star.in() && !probe.in_factor_closure_product)
      rep.counterexample = true;
    rep.evidence.push_back(std::move(probe));
  }
  std::sort(rep.evidence.begin(), rep.evidence.end(),
            [](const TightProbe& a, const TightProbe& b) {
              return a.element.to_string() < b.element.to_string();
            });
  return rep;
}

QuotientIdeal colon_socle_bound(const QuotientIdeal& q) {
  if (!is_m_primary(q.lift(), IdealHandle(q.ring()->ambient(), {})))
    throw NotMPrimaryError();
  return quotient_ideal_colon(q, max_ideal(q.ring()));
}

}  // namespace charp
