#include <doctest.h>

#include <random>

#include "charp/errors.hpp"
#include "charp/frobenius.hpp"
#include "test_helpers.hpp"

using namespace charp;
using namespace charp_test;

namespace {

RingPresPtr hypersurface255() {
  auto F2 = make_field(2);
  auto R = make_poly_ring(F2, {"x", "y", "z"});
  Polynomial x = var(R, "x"), y = var(R, "y"), z = var(R, "z");
  return quotient_ring(R, IdealHandle(R, {x * x + y.pow(3) + z.pow(5)}));
}

}  // namespace

TEST_CASE("bracket_power examples") {
  SUBCASE("(y,z)^[2] = (y^2, z^2) on the hypersurface") {
    auto P = hypersurface255();
    auto R = P->ambient();
    QuotientIdeal q(P, {var(R, "y"), var(R, "z")});
    QuotientIdeal q2 = bracket_power(q, 1);
    QuotientIdeal expect(P, {var(R, "y") * var(R, "y"), var(R, "z") * var(R, "z")});
    CHECK(q2.equals(expect));
    CHECK(bracket_power(q, 0).equals(q));
  }
  SUBCASE("(x+uy)^[2] = (x^2 + u^2 y^2) over F_2(u)") {
    auto F = make_field(2, {"u"});
    auto R = make_poly_ring(F, {"x", "y"});
    auto P = RingPresentation::polynomial(R);
    Scalar u = Scalar::parameter(F, 0);
    Polynomial g = var(R, "x") + var(R, "y").scale(u);
    QuotientIdeal I(P, {g});
    QuotientIdeal expect(
        P, {var(R, "x").pow(2) + var(R, "y").pow(2).scale(u * u)});
    CHECK(bracket_power(I, 1).equals(expect));
  }
  SUBCASE("bracket of a product equals product of brackets") {
    auto F2 = make_field(2);
    auto R = make_poly_ring(F2, {"x", "y"});
    auto P = RingPresentation::polynomial(R);
    QuotientIdeal q(P, {var(R, "x"), var(R, "y")});
    QuotientIdeal prod = quotient_ideal_product(q, q);
    CHECK(bracket_power(prod, 1).equals(
        quotient_ideal_product(bracket_power(q, 1), bracket_power(q, 1))));
  }
  SUBCASE("independent of the generating set") {
    auto P = hypersurface255();
    auto R = P->ambient();
    Polynomial y = var(R, "y"), z = var(R, "z");
    QuotientIdeal a(P, {y, z});
    QuotientIdeal b(P, {y + z, z, y * y});  // same ideal, different generators
    REQUIRE(a.equals(b));
    for (unsigned e : {1u, 2u}) CHECK(bracket_power(a, e).equals(bracket_power(b, e)));
  }
}

TEST_CASE("frobenius_preimage examples") {
  auto F2 = make_field(2);
  auto R = make_poly_ring(F2, {"x"});
  Polynomial x = var(R, "x");

  CHECK(ideal_equal(frobenius_preimage(IdealHandle(R, {x * x}), 1),
                    IdealHandle(R, {x})));
  CHECK(ideal_equal(frobenius_preimage(IdealHandle(R, {x.pow(3)}), 1),
                    IdealHandle(R, {x * x})));
  SUBCASE("unit ideal pulls back to the unit ideal") {
    IdealHandle one(R, {Polynomial::one(R)});
    CHECK(ideal_equal(frobenius_preimage(one, 1), one));
  }
  SUBCASE("parameter coefficients refused") {
    auto F = make_field(2, {"u"});
    auto Ru = make_poly_ring(F, {"x"});
    CHECK_THROWS_AS(
        frobenius_preimage(IdealHandle(Ru, {var(Ru, "x")}), 1),
        NonPerfectCoefficientsError);
  }
}

TEST_CASE("frobenius_membership examples") {
  SUBCASE("x in (y,z)^F on the hypersurface, certificate e=1") {
    auto P = hypersurface255();
    auto R = P->ambient();
    QuotientIdeal q(P, {var(R, "y"), var(R, "z")});
    Verdict v = frobenius_membership(var(R, "x"), q, 1);
    CHECK(v.in());
    CHECK(v.certificate_exponent == 1u);
    CHECK(replay_certificate(v));
  }
  SUBCASE("generators are in at e=0") {
    auto P = hypersurface255();
    auto R = P->ambient();
    QuotientIdeal q(P, {var(R, "y"), var(R, "z")});
    Verdict v = frobenius_membership(var(R, "y"), q, 2);
    CHECK(v.in());
    CHECK(v.certificate_exponent == 0u);
  }
  SUBCASE("polynomial ring: x notin (y,z)^F, UNKNOWN") {
    auto R = make_poly_ring(make_field(2), {"x", "y", "z"});
    auto P = RingPresentation::polynomial(R);
    QuotientIdeal q(P, {var(R, "y"), var(R, "z")});
    Verdict v = frobenius_membership(var(R, "x"), q, 4);
    CHECK(v.unknown());
    CHECK(v.explored_emax == 4);
  }
}

TEST_CASE("frobenius_closure examples") {
  SUBCASE("(y,z) on the hypersurface climbs to m and stabilizes") {
    auto P = hypersurface255();
    auto R = P->ambient();
    QuotientIdeal q(P, {var(R, "y"), var(R, "z")});
    ClosureChain chain = frobenius_closure(q, 4, 2);
    CHECK(chain.stable);
    QuotientIdeal m = max_ideal(P);
    CHECK(chain.candidate().equals(m));
    // ascending already asserted internally; entries C_1.. all equal m
    CHECK(chain.entries.size() >= 4);
    CHECK(chain.entries[1].second.equals(m));
  }
  SUBCASE("regular ring: chain constant at (x)") {
    auto R = make_poly_ring(make_field(2), {"x", "y"});
    auto P = RingPresentation::polynomial(R);
    QuotientIdeal I(P, {var(R, "x")});
    ClosureChain chain = frobenius_closure(I, 4, 2);
    CHECK(chain.stable);
    CHECK(chain.candidate().equals(I));
    CHECK(chain.entries.size() == 3);  // C_0 = C_1 = C_2 certifies w = 2
  }
  SUBCASE("(0) in F_2[x,y]/(x^2) closes to (x)") {
    auto R = make_poly_ring(make_field(2), {"x", "y"});
    Polynomial x = var(R, "x");
    auto P = quotient_ring(R, IdealHandle(R, {x * x}));
    QuotientIdeal zero(P, {});
    ClosureChain chain = frobenius_closure(zero, 4, 2);
    CHECK(chain.stable);
    CHECK(chain.candidate().equals(QuotientIdeal(P, {x})));
  }
}

TEST_CASE("is_frobenius_closed examples") {
  ClosedParams params;

  SUBCASE("hypersurface (y,z): OUT with witness (x, 1)") {
    auto P = hypersurface255();
    auto R = P->ambient();
    QuotientIdeal q(P, {var(R, "y"), var(R, "z")});
    Verdict v = is_frobenius_closed(q, params);
    CHECK(v.out());
    REQUIRE(v.witness.has_value());
    CHECK(P->elements_equal(*v.witness, var(R, "x")));
    CHECK(v.witness_exponent == 1u);
    CHECK(replay_certificate(v));
  }
  SUBCASE("monomial ideals in a polynomial ring are closed") {
    auto R = make_poly_ring(make_field(2), {"x", "y", "z"});
    auto P = RingPresentation::polynomial(R);
    Polynomial x = var(R, "x"), y = var(R, "y"), z = var(R, "z");
    for (auto gens : {std::vector<Polynomial>{x, y * z},
                      std::vector<Polynomial>{x * x, y.pow(3)},
                      std::vector<Polynomial>{x * y, z}}) {
      Verdict v = is_frobenius_closed(QuotientIdeal(P, gens), params);
      CHECK(v.in());
    }
  }
  SUBCASE("certified members of the closure satisfy radical membership") {
    auto P = hypersurface255();
    auto R = P->ambient();
    QuotientIdeal q(P, {var(R, "y"), var(R, "z")});
    Verdict v = is_frobenius_closed(q, params);
    REQUIRE(v.out());
    // I subseteq I^F subseteq sqrt(I): some small power of the witness lies in I
    Polynomial w = *v.witness;
    bool radical = false;
    Polynomial pw = w;
    for (int n = 1; n <= 40 && !radical; ++n) {
      if (q.contains(pw)) radical = true;
      pw = pw * w;
    }
    CHECK(radical);
  }
}

TEST_CASE("closure of random ideals in polynomial rings is trivial") {
  auto R = make_poly_ring(make_field(2), {"x", "y", "z"});
  auto P = RingPresentation::polynomial(R);
  std::mt19937_64 rng(2024);
  int checked = 0;
  for (int trial = 0; trial < 50; ++trial) {
    // random monomial or pure-power parameter ideal
    std::vector<Polynomial> gens;
    if (trial % 2 == 0) {
      int n = 1 + int(rng() % 3);
      for (int i = 0; i < n; ++i)
        gens.push_back(mono(R, {unsigned(rng() % 3), unsigned(rng() % 3),
                                unsigned(rng() % 3)}));
    } else {
      for (std::size_t k = 0; k < 3; ++k)
        if (rng() % 2)
          gens.push_back(Polynomial::variable(R, k).pow(1 + rng() % 3));
    }
    QuotientIdeal I(P, gens);
    if (!I.is_proper() || I.lift().generators().empty()) continue;
    ClosureChain chain = frobenius_closure(I, 4, 2);
    CHECK(chain.stable);
    CHECK(chain.candidate().equals(I));
    ++checked;
  }
  CHECK(checked >= 40);
}

TEST_CASE("bracket_commute_check examples and recorded baselines") {
  SUBCASE("regular ring PASS: q = (y,z) in F_2[x,y,z]") {
    auto R = make_poly_ring(make_field(2), {"x", "y", "z"});
    auto P = RingPresentation::polynomial(R);
    QuotientIdeal q(P, {var(R, "y"), var(R, "z")});
    BracketCommuteReport rep = bracket_commute_check(q, 4, 2);
    CHECK(rep.pass);
    CHECK(rep.certified);
    QuotientIdeal expect(P, {var(R, "y").pow(2), var(R, "z").pow(2)});
    CHECK(rep.lhs.equals(expect));
    CHECK(rep.rhs.equals(expect));
  }
  SUBCASE("hypersurface baseline: q = (y,z) FAILS (ring is not F-injective)") {
    // computed baseline, hand-checked: (q^F)^[2] = m^[2] while (q^[2])^F
    // contains xy, which lies outside m^[2]
    auto P = hypersurface255();
    auto R = P->ambient();
    QuotientIdeal q(P, {var(R, "y"), var(R, "z")});
    BracketCommuteReport rep = bracket_commute_check(q, 4, 2);
    CHECK(rep.certified);
    CHECK_FALSE(rep.pass);
    Polynomial xy = var(R, "x") * var(R, "y");
    CHECK(rep.rhs.contains(xy));
    CHECK_FALSE(rep.lhs.contains(xy));
  }
  SUBCASE("non-reduced baseline: q = (x) in F_2[x,y]/(y^2) FAILS") {
    // hand-checked: (q^F)^[2] = (x^2, y^2) = (x^2) + J while (q^[2])^F = (x^2, y)
    auto R = make_poly_ring(make_field(2), {"x", "y"});
    Polynomial x = var(R, "x"), y = var(R, "y");
    auto P = quotient_ring(R, IdealHandle(R, {y * y}));
    QuotientIdeal q(P, {x});
    BracketCommuteReport rep = bracket_commute_check(q, 4, 2);
    CHECK(rep.certified);
    CHECK_FALSE(rep.pass);
    CHECK(rep.lhs_chain.candidate().equals(QuotientIdeal(P, {x, y})));
    CHECK(rep.rhs_chain.candidate().equals(QuotientIdeal(P, {x * x, y})));
  }
  SUBCASE("parameter fields are refused") {
    auto F = make_field(2, {"u"});
    auto R = make_poly_ring(F, {"x"});
    auto P = RingPresentation::polynomial(R);
    CHECK_THROWS_AS(
        bracket_commute_check(QuotientIdeal(P, {var(R, "x")}), 2, 1),
        NonPerfectCoefficientsError);
  }
}
