#include <doctest.h>

#include "charp/errors.hpp"
#include "charp/quotient.hpp"
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

RingPresPtr one_dim_xy() {
  auto F = make_field(2, {"t"});
  auto R = make_poly_ring(F, {"x", "y"});
  return quotient_ring(R, IdealHandle(R, {var(R, "x") * var(R, "y")}));
}

}  // namespace

TEST_CASE("quotient_ring examples") {
  SUBCASE("F_2[x,y,z]/(x^2+y^3+z^5) has dimension 2") {
    CHECK(hypersurface255()->dimension() == 2);
  }
  SUBCASE("F_2(t)[x,y]/(xy) has dimension 1") {
    CHECK(one_dim_xy()->dimension() == 1);
  }
  SUBCASE("F_2[x]/(0) has dimension 1") {
    auto R = make_poly_ring(make_field(2), {"x"});
    CHECK(RingPresentation::polynomial(R)->dimension() == 1);
  }
  SUBCASE("unit relation rejected") {
    auto R = make_poly_ring(make_field(2), {"x"});
    CHECK_THROWS_AS(quotient_ring(R, IdealHandle(R, {Polynomial::one(R)})),
                    UnitRelationError);
  }
}

TEST_CASE("is_regular_sequence examples") {
  SUBCASE("(y, z) is regular on the hypersurface") {
    auto P = hypersurface255();
    auto R = P->ambient();
    CHECK(is_regular_sequence({var(R, "y"), var(R, "z")}, P));
  }
  SUBCASE("(x, y) is not regular mod (xy)") {
    auto P = one_dim_xy();
    auto R = P->ambient();
    CHECK_FALSE(is_regular_sequence({var(R, "x"), var(R, "y")}, P));
  }
  SUBCASE("a repeated nonunit is never regular") {
    auto R = make_poly_ring(make_field(2), {"x", "y"});
    auto P = RingPresentation::polynomial(R);
    CHECK_FALSE(is_regular_sequence({var(R, "x"), var(R, "x")}, P));
  }
}

TEST_CASE("is_filter_regular_sequence examples") {
  auto P = one_dim_xy();
  auto R = P->ambient();
  Polynomial x = var(R, "x"), y = var(R, "y");
  SUBCASE("x + y is filter regular mod (xy)") {
    // oracle: ((xy) : (x+y)) = (xy), already saturated
    CHECK(ideal_equal(ideal_colon(IdealHandle(R, {x * y}), IdealHandle(R, {x + y})),
                      IdealHandle(R, {x * y})));
    CHECK(is_filter_regular_sequence({x + y}, P));
  }
  SUBCASE("x alone is not: (0 : x) = (y) has infinite length") {
    CHECK(ideal_equal(ideal_colon(IdealHandle(R, {x * y}), IdealHandle(R, {x})),
                      IdealHandle(R, {y})));
    CHECK_FALSE(is_filter_regular_sequence({x}, P));
  }
  SUBCASE("units are filter regular") {
    CHECK(is_filter_regular_sequence({Polynomial::one(R)}, P));
  }
}

TEST_CASE("is_system_of_parameters examples") {
  SUBCASE("(y, z) on the hypersurface") {
    auto P = hypersurface255();
    auto R = P->ambient();
    CHECK(is_system_of_parameters({var(R, "y"), var(R, "z")}, P));
  }
  SUBCASE("(xy) alone works in F_2[x,y,z]; (x, xy) drops dimension only once") {
    auto R = make_poly_ring(make_field(2), {"x", "y", "z"});
    auto P = RingPresentation::polynomial(R);
    Polynomial x = var(R, "x"), y = var(R, "y");
    CHECK(is_system_of_parameters({x * y}, P));
    CHECK_FALSE(is_system_of_parameters({x, x * y}, P));
  }
  SUBCASE("too many elements raises") {
    auto P = one_dim_xy();
    auto R = P->ambient();
    CHECK_THROWS_AS(
        is_system_of_parameters({var(R, "x"), var(R, "y")}, P),
        TooManyElementsError);
  }
}

TEST_CASE("regular sequences are filter regular and systems of parameters") {
  auto P = hypersurface255();
  auto R = P->ambient();
  std::vector<Polynomial> seq{var(R, "y"), var(R, "z")};
  REQUIRE(is_regular_sequence(seq, P));
  CHECK(is_filter_regular_sequence(seq, P));
  CHECK(is_system_of_parameters(seq, P));

  auto P1 = one_dim_xy();
  auto R1 = P1->ambient();
  std::vector<Polynomial> seq1{var(R1, "x") + var(R1, "y")};
  REQUIRE(is_regular_sequence(seq1, P1));
  CHECK(is_filter_regular_sequence(seq1, P1));
  CHECK(is_system_of_parameters(seq1, P1));
}

TEST_CASE("subring_presentation examples") {
  auto F5 = make_field(5);
  auto S = make_poly_ring(F5, {"x"});
  Polynomial x = var(S, "x");
  auto P = RingPresentation::polynomial(S);

  SUBCASE("single generator x^2 is free") {
    auto sp = subring_presentation(P, {x * x});
    CHECK(ideal_is_zero(sp.kernel));
    CHECK(sp.presentation_ring->nvars() == 1);
    CHECK(sp.contract(x.pow(4)) ==
          var(sp.presentation_ring, "a") * var(sp.presentation_ring, "a"));
    CHECK_THROWS_AS(sp.contract(x.pow(3)), NotInSubringError);
  }
  SUBCASE("x^2, x^3 present the cusp: kernel (a^3 - b^2)") {
    auto sp = subring_presentation(P, {x * x, x.pow(3)});
    Polynomial a = var(sp.presentation_ring, "a");
    Polynomial b = var(sp.presentation_ring, "b");
    CHECK(ideal_equal(sp.kernel,
                      IdealHandle(sp.presentation_ring, {a.pow(3) - b * b})));
    // substitution check: every kernel generator maps to 0 in R
    RingMap emb = sp.embedding();
    for (const auto& k : sp.kernel.generators())
      CHECK(P->is_zero_in_ring(apply_ring_map(emb, k)));
  }
}

TEST_CASE("veronese presentation of the F_2(u,v) quadric") {
  auto F = make_field(2, {"u", "v"});
  auto S = make_poly_ring(F, {"x", "y", "z"});
  Polynomial x = var(S, "x"), y = var(S, "y"), z = var(S, "z");
  Scalar u = Scalar::parameter(F, 0), v = Scalar::parameter(F, 1);
  Polynomial rel = x * x + (y * y).scale(u) + (z * z).scale(v);
  auto P = quotient_ring(S, IdealHandle(S, {rel}));

  auto sp = veronese_presentation(P, 2);
  // five degree-2 normal monomials in descending graded lex:
  // a=xy, b=xz, c=y^2, d=yz, e=z^2
  REQUIRE(sp.generators.size() == 5);
  CHECK(sp.generators[0] == x * y);
  CHECK(sp.generators[1] == x * z);
  CHECK(sp.generators[2] == y * y);
  CHECK(sp.generators[3] == y * z);
  CHECK(sp.generators[4] == z * z);

  auto T = sp.presentation_ring;
  Polynomial a = var(T, "a"), b = var(T, "b"), c = var(T, "c"),
             d = var(T, "d"), e = var(T, "e");

  SUBCASE("kernel contains the six expected quadrics") {
    std::vector<Polynomial> expected{
        a * d + b * c,
        d * d + c * e,
        a * a + (c * c).scale(u) + (c * e).scale(v),
        b * b + (c * e).scale(u) + (e * e).scale(v),
        a * b + (c * d).scale(u) + (d * e).scale(v),
        a * e + b * d};
    for (const auto& k : expected) CHECK(ideal_membership(k, sp.kernel));
    // and every kernel generator maps to 0 in S/(rel)
    RingMap emb = sp.embedding();
    for (const auto& k : sp.kernel.generators())
      CHECK(P->is_zero_in_ring(apply_ring_map(emb, k)));
  }

  SUBCASE("the presented ring is two-dimensional") {
    CHECK(sp.presented->dimension() == 2);
  }

  SUBCASE("contraction rewrites subring elements") {
    // x^2 = u*y^2 + v*z^2 in S, so its image is u*c + v*e
    Polynomial img = sp.contract(x * x);
    CHECK(sp.presented->elements_equal(img, c.scale(u) + e.scale(v)));
    // y*z^3 = (yz)(z^2) = d*e
    Polynomial img2 = sp.contract(y * z.pow(3));
    CHECK(sp.presented->elements_equal(img2, d * e));
    CHECK_THROWS_AS(sp.contract(x), NotInSubringError);
  }

  SUBCASE("images of {x^2, y^2} and {xy, z^2} are systems of parameters") {
    std::vector<Polynomial> q1{sp.contract(x * x), sp.contract(y * y)};
    std::vector<Polynomial> q2{sp.contract(x * y), sp.contract(z * z)};
    CHECK(is_system_of_parameters(q1, sp.presented));
    CHECK(is_system_of_parameters(q2, sp.presented));
  }

  SUBCASE("the rational-coefficient square decomposition of (yz^3)^2") {
    // (yz^3)^2 = v^{-3}(x^3y)^2 + u^2 v^{-3}(xy^3)^2 + u v^{-1}(y^2z^2)^2
    // modulo the quadric, with exact fraction scalars
    Scalar vinv3 = (v * v * v).inverse();
    Scalar u2v3 = u * u * vinv3;
    Scalar uv1 = u * v.inverse();
    Polynomial lhs = (y * z.pow(3)).pow(2);
    Polynomial rhs = (x.pow(3) * y).pow(2).scale(vinv3) +
                     (x * y.pow(3)).pow(2).scale(u2v3) +
                     (y * y * z * z).pow(2).scale(uv1);
    CHECK(P->elements_equal(lhs, rhs));
    // each square is the Frobenius power of a product-ideal generator, so
    // the identity exhibits (yz^3)^2 inside the bracketed product ideal
    IdealHandle bracket(S, {(x.pow(3) * y).frobenius_power(1),
                            (x * y.pow(3)).frobenius_power(1),
                            (y * y * z * z).frobenius_power(1),
                            rel});
    CHECK(ideal_membership(lhs, bracket));
  }
}

TEST_CASE("normal monomials") {
  auto P = one_dim_xy();
  auto R = P->ambient();
  auto ms = normal_monomials(P, 3);
  // 1, x, y, x^2, y^2, x^3, y^3 (xy and its multiples are leading terms)
  CHECK(ms.size() == 7);
}
