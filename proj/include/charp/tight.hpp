#ifndef CHARP_TIGHT_HPP
#define CHARP_TIGHT_HPP

#include "charp/frobenius.hpp"

namespace charp {

// Multiplier c for tight-closure tests. Admissibility means c avoids every
// minimal prime (c in R°): verified exactly for principal-relation rings and
// polynomial rings, user-asserted otherwise. Only a multiplier with
// test-element status can refute memberships.
struct MultiplierCertificate {
  enum class Admissibility { PrincipalVerified, UserAsserted };
  enum class TestStatus { Asserted, JacobianDerived, None };

  Polynomial element;  // nonzero in R, ambient representative
  Admissibility admissibility = Admissibility::UserAsserted;
  TestStatus status = TestStatus::None;
  std::string note;

  bool can_refute() const { return status != TestStatus::None; }
};

// Builds a certificate, verifying admissibility where the presentation is
// principal (the colon test ((f) : c) = (f) holds iff c shares no factor
// with the relation f). Throws InadmissibleMultiplierError when verification
// is possible and fails, or when c = 0 in R.
MultiplierCertificate make_multiplier(const RingPresPtr& R, const Polynomial& c,
                                      MultiplierCertificate::TestStatus status);

// Partial derivatives of the relation generators, reduced and filtered to
// admissible nonzero elements; EmptyJacobianError when all partials vanish.
// Valid as test-element candidates for reduced equidimensional affine
// hypersurfaces / complete intersections; the note records the hypotheses.
std::vector<MultiplierCertificate> jacobian_test_element_candidates(
    const RingPresPtr& R);

// Membership of x in I^*. IN comes from the Frobenius route (I^F subseteq
// I^*). OUT needs a test-element multiplier c with c*x^(p^e) notin I^[p^e]
// for some 1 <= e <= emax. Otherwise UNKNOWN; passing memberships for all
// e <= emax are recorded as positive evidence only.
Verdict tight_membership(const Polynomial& x, const QuotientIdeal& I,
                         const MultiplierCertificate& c, unsigned emax);

// Special part of the tight closure: x^(q1) in (m I^[q1])^* for some
// q1 = p^(e1), detected via the Frobenius route; never OUT.
Verdict special_part_membership(const Polynomial& x, const QuotientIdeal& I,
                                unsigned emax);

enum class LayerResult { Holds, Fails, Undetermined };
std::string layer_result_string(LayerResult r);

// Per-probe record of the tight layer of a product-identity check.
struct TightProbe {
  Polynomial element;
  Verdict in_product_star;      // membership in (q1 q2)^*
  bool in_factor_closure_product = false;  // q1^F-candidate * q2^F-candidate
};

// Product-identity check of (q1 q2)^* = q1^* q2^* at the decidable Frobenius
// layer plus verdict-level tight evidence.
struct ProductIdentityReport {
  bool q1_subseteq_q2 = false;
  bool q2_subseteq_q1 = false;
  bool hypothesis_flagged = false;  // q1 subseteq q2 fails
  bool q1_parameter = false;
  bool q2_parameter = false;

  Verdict q1_closed, q2_closed, product_closed;
  LayerResult frobenius_equality = LayerResult::Undetermined;
  std::string frobenius_method;

  // decomposition route (monomial products in regular presentations):
  // components re-intersect to the product
  bool decomposition_checked = false;
  bool decomposition_valid = false;
  std::size_t decomposition_components = 0;

  std::vector<TightProbe> tight_evidence;

  bool frobenius_layer_pass() const {
    return q1_closed.in() && q2_closed.in() && product_closed.in() &&
           frobenius_equality == LayerResult::Holds;
  }
  Status status() const {
    if (frobenius_equality == LayerResult::Fails) return Status::Out;
    if (frobenius_layer_pass()) return Status::In;
    return Status::Unknown;
  }
};

ProductIdentityReport product_identity_check(
    const QuotientIdeal& q1, const QuotientIdeal& q2,
    const std::optional<MultiplierCertificate>& mult, const ClosedParams& params);

// Briancon-Skoda style question (q^2)^* subseteq q: decidable surrogate
// (q^2)^F subseteq q plus tight evidence for closure probes.
struct BriansonSkodaReport {
  bool q_parameter = false;
  LayerResult surrogate = LayerResult::Undetermined;  // (q^2)^F subseteq q
  std::string surrogate_method;
  std::vector<TightProbe> evidence;  // per-probe tight memberships in (q^2)^*
  bool counterexample = false;       // certified member of (q^2)^* outside q

  Status status() const {
    if (counterexample || surrogate == LayerResult::Fails) return Status::Out;
    if (surrogate == LayerResult::Holds) return Status::In;
    return Status::Unknown;
  }
};

BriansonSkodaReport briancon_skoda_check(const QuotientIdeal& q,
                                         const MultiplierCertificate& c,
                                         const ClosedParams& params);

// (q : m) for m-primary q: a lower bound for q^* valid under Gorenstein +
// non-F-rational hypotheses; the operation itself only computes the colon.
QuotientIdeal colon_socle_bound(const QuotientIdeal& q);

}  // namespace charp

#endif
