#include <doctest.h>

#include <random>
#include <thread>
#include <set>

#include "charp/budget.hpp"
#include "charp/errors.hpp"
#include "test_helpers.hpp"

using namespace charp;
using namespace charp_test;

namespace {

// brute-force membership in a monomial ideal: some generator divides
bool mono_member(const ExpVec& m, const std::vector<ExpVec>& gens) {
  for (const auto& g : gens)
    if (exp_divides(g, m)) return true;
  return false;
}

std::vector<ExpVec> monomials_up_to(std::size_t nvars, unsigned maxdeg) {
  std::vector<ExpVec> out;
  ExpVec cur(nvars, 0);
  // odometer enumeration
  for (;;) {
    if (exp_total_degree(cur) <= maxdeg) out.push_back(cur);
    std::size_t k = 0;
    while (k < nvars) {
      if (++cur[k] > maxdeg) {
        cur[k] = 0;
        ++k;
      } else {
        break;
      }
    }
    if (k == nvars) break;
  }
  return out;
}

std::vector<ExpVec> gens_of(const IdealHandle& I) {
  std::vector<ExpVec> out;
  for (const auto& g : I.generators()) out.push_back(g.leading_term().exp);
  return out;
}

}  // namespace

TEST_CASE("groebner_basis examples") {
  SUBCASE("(x^2 - y, y) in F_5[x,y] lex -> {x^2, y}") {
    auto F5 = make_field(5);
    auto R = make_poly_ring(F5, {"x", "y"}, MonomialOrder::lex(2));
    Polynomial x = var(R, "x"), y = var(R, "y");
    IdealHandle I(R, {x * x - y, y});
    const auto& gb = I.groebner_basis();
    REQUIRE(gb.size() == 2);
    CHECK(gb[0] == y);
    CHECK(gb[1] == x * x);
    CHECK(buchberger_criterion_holds(gb, R->order()));
  }
  SUBCASE("principal ideal is its own reduced basis") {
    auto F2 = make_field(2);
    auto R = make_poly_ring(F2, {"x", "y"});
    Polynomial x = var(R, "x");
    IdealHandle I(R, {x});
    REQUIRE(I.groebner_basis().size() == 1);
    CHECK(I.groebner_basis()[0] == x);
  }
  SUBCASE("twisted cubic: z*y - x^5 reduces to 0") {
    auto F5 = make_field(5);
    auto R = make_poly_ring(F5, {"z", "y", "x"}, MonomialOrder::lex(3));
    Polynomial z = var(R, "z"), y = var(R, "y"), x = var(R, "x");
    IdealHandle I(R, {y - x * x, z - x * x * x});
    CHECK(ideal_membership(z * y - x.pow(5), I));
    CHECK(buchberger_criterion_holds(I.groebner_basis(), R->order()));
  }
}

TEST_CASE("normal_form examples") {
  auto F2 = make_field(2);
  SUBCASE("f = x^2 against GB{x} is 0; x+y leaves y") {
    auto R = make_poly_ring(F2, {"x", "y"});
    Polynomial x = var(R, "x"), y = var(R, "y");
    IdealHandle I(R, {x});
    CHECK(normal_form(x * x, I).is_zero());
    CHECK(normal_form(x + y, I) == y);
    CHECK(normal_form(normal_form(x + y, I), I) == y);  // idempotent
  }
  SUBCASE("hypersurface relation: reduction depends on the order") {
    auto Rg = make_poly_ring(F2, {"x", "y", "z"});
    Polynomial x = var(Rg, "x"), y = var(Rg, "y"), z = var(Rg, "z");
    Polynomial rel = x * x + y.pow(3) + z.pow(5);
    // under grevlex the leading term of the relation is z^5, so x^2 is
    // already reduced
    CHECK(normal_form(x * x, IdealHandle(Rg, {rel})) == x * x);
    // under lex x > y > z the leading term is x^2 and one reduction step
    // rewrites it as y^3 + z^5
    auto Rl = make_poly_ring(F2, {"x", "y", "z"}, MonomialOrder::lex(3));
    Polynomial xl = var(Rl, "x"), yl = var(Rl, "y"), zl = var(Rl, "z");
    Polynomial rell = xl * xl + yl.pow(3) + zl.pow(5);
    CHECK(normal_form(xl * xl, IdealHandle(Rl, {rell})) ==
          yl.pow(3) + zl.pow(5));
  }
}

TEST_CASE("ideal_membership examples") {
  auto F2 = make_field(2);
  auto R = make_poly_ring(F2, {"x", "y", "z"});
  Polynomial x = var(R, "x"), y = var(R, "y"), z = var(R, "z");

  SUBCASE("lifted hypersurface membership: x^2 in (y^2, z^2) + J") {
    Polynomial rel = x * x + y.pow(3) + z.pow(5);
    IdealHandle I(R, {y * y, z * z, rel});
    CHECK(ideal_membership(x * x, I));
  }
  SUBCASE("x not in (y, z)") {
    CHECK_FALSE(ideal_membership(x, ideal_of(R, {y, z})));
  }
  SUBCASE("x^3*y^3 in (x^4, y^4, x^2y^2)") {
    IdealHandle I(R, {x.pow(4), y.pow(4), x * x * y * y});
    CHECK(ideal_membership(x.pow(3) * y.pow(3), I));
  }
}

TEST_CASE("ideal_product examples") {
  auto F2 = make_field(2);
  auto R = make_poly_ring(F2, {"x", "y", "z"});
  Polynomial x = var(R, "x"), y = var(R, "y"), z = var(R, "z");

  CHECK(ideal_equal(ideal_product(ideal_of(R, {x}), ideal_of(R, {y})),
                    ideal_of(R, {x * y})));
  SUBCASE("(x^2,y^2)*(xy,z^2) = (x^3y, x^2z^2, xy^3, y^2z^2)") {
    IdealHandle P = ideal_product(ideal_of(R, {x * x, y * y}),
                                  ideal_of(R, {x * y, z * z}));
    IdealHandle expect(R, {x.pow(3) * y, x * x * z * z, x * y.pow(3),
                           y * y * z * z});
    CHECK(ideal_equal(P, expect));
  }
  SUBCASE("I * (0) = (0)") {
    IdealHandle Z = ideal_product(ideal_of(R, {x}), ideal_of(R, {}));
    CHECK(ideal_is_zero(Z));
  }
  SUBCASE("I * (1) = I") {
    IdealHandle I = ideal_of(R, {x, y * z});
    CHECK(ideal_equal(ideal_product(I, ideal_of(R, {Polynomial::one(R)})), I));
  }
}

TEST_CASE("ideal_intersection examples") {
  auto F2 = make_field(2);
  auto R = make_poly_ring(F2, {"x", "y"});
  Polynomial x = var(R, "x"), y = var(R, "y");

  CHECK(ideal_equal(ideal_intersection(ideal_of(R, {x}), ideal_of(R, {y})),
                    ideal_of(R, {x * y})));
  CHECK(ideal_equal(ideal_intersection(ideal_of(R, {x * x}), ideal_of(R, {x})),
                    ideal_of(R, {x * x})));

  SUBCASE("(x, y^2) cap (x^2, y) = (x^2, xy, y^2), cross-checked brute force") {
    IdealHandle A = ideal_of(R, {x, y * y});
    IdealHandle B = ideal_of(R, {x * x, y});
    IdealHandle got = ideal_intersection(A, B);
    IdealHandle expect(R, {x * x, x * y, y * y});
    CHECK(ideal_equal(got, expect));
    // brute force to degree 4: membership in both monomial ideals
    auto ga = gens_of(A), gb = gens_of(B);
    for (const auto& m : monomials_up_to(2, 4)) {
      bool in_both = mono_member(m, ga) && mono_member(m, gb);
      Polynomial mm = Polynomial::monomial(R, m, Scalar::one(F2));
      CHECK(ideal_membership(mm, got) == in_both);
    }
  }
  SUBCASE("symmetric") {
    IdealHandle A = ideal_of(R, {x * y + y * y, x * x});
    IdealHandle B = ideal_of(R, {y});
    CHECK(ideal_equal(ideal_intersection(A, B), ideal_intersection(B, A)));
  }
}

TEST_CASE("ideal_colon examples") {
  auto F2 = make_field(2);
  auto R = make_poly_ring(F2, {"x", "y"});
  Polynomial x = var(R, "x"), y = var(R, "y");

  CHECK(ideal_equal(ideal_colon(ideal_of(R, {x * y}), ideal_of(R, {x})),
                    ideal_of(R, {y})));
  CHECK(ideal_equal(ideal_colon(ideal_of(R, {x * x}), ideal_of(R, {x.pow(3)})),
                    ideal_of(R, {Polynomial::one(R)})));
  SUBCASE("(I : (1)) = I and I subseteq (I : J)") {
    IdealHandle I = ideal_of(R, {x * x, y});
    CHECK(ideal_equal(ideal_colon(I, ideal_of(R, {Polynomial::one(R)})), I));
    IdealHandle C = ideal_colon(I, ideal_of(R, {x}));
    CHECK(ideal_contains(C, I));
  }
  SUBCASE("socle-type colon in the quotient lift: ((y,z)+J : (x,y,z)) = (x,y,z)") {
    auto R3 = make_poly_ring(F2, {"x", "y", "z"});
    Polynomial x3 = var(R3, "x"), y3 = var(R3, "y"), z3 = var(R3, "z");
    Polynomial rel = x3 * x3 + y3.pow(3) + z3.pow(5);
    IdealHandle lift(R3, {y3, z3, rel});
    IdealHandle m(R3, {x3, y3, z3});
    CHECK(ideal_equal(ideal_colon(lift, m), m));
  }
}

TEST_CASE("saturation examples") {
  auto F2 = make_field(2);
  auto R = make_poly_ring(F2, {"x", "y"});
  Polynomial x = var(R, "x"), y = var(R, "y");

  // (x^2 y : x^infty) = (y), stabilizes at the second colon
  CHECK(ideal_equal(saturation(ideal_of(R, {x * x * y}), ideal_of(R, {x})),
                    ideal_of(R, {y})));
  SUBCASE("sat(I, (1)) = I") {
    IdealHandle I = ideal_of(R, {x * x, x * y});
    CHECK(ideal_equal(saturation(I, ideal_of(R, {Polynomial::one(R)})), I));
  }
  CHECK(ideal_equal(saturation(ideal_of(R, {x * x}), ideal_of(R, {x})),
                    ideal_of(R, {Polynomial::one(R)})));
}

TEST_CASE("ring_map_kernel examples") {
  auto F5 = make_field(5);
  SUBCASE("cusp: X -> x^2, Y -> x^3 has kernel (X^3 - Y^2)") {
    auto S = make_poly_ring(F5, {"X", "Y"});
    auto T = make_poly_ring(F5, {"x"});
    Polynomial x = var(T, "x");
    RingMap m(S, T, {x * x, x * x * x});
    IdealHandle K = ring_map_kernel(m, IdealHandle(T, {}));
    Polynomial X = var(S, "X"), Y = var(S, "Y");
    CHECK(ideal_equal(K, ideal_of(S, {X.pow(3) - Y * Y})));
    // verify by substitution
    for (const auto& g : K.generators())
      CHECK(apply_ring_map(m, g).is_zero());
  }
  SUBCASE("identity map has kernel (0)") {
    auto S = make_poly_ring(F5, {"x", "y"});
    RingMap m(S, S, {var(S, "x"), var(S, "y")});
    CHECK(ideal_is_zero(ring_map_kernel(m, IdealHandle(S, {}))));
  }
  SUBCASE("Frobenius graph: preimage of (x^2) under s -> s^2 is (x)") {
    auto F2 = make_field(2);
    auto S = make_poly_ring(F2, {"x"});
    Polynomial x = var(S, "x");
    RingMap m(S, S, {x * x});
    IdealHandle K = ring_map_kernel(m, IdealHandle(S, {x * x}));
    CHECK(ideal_equal(K, ideal_of(S, {x})));
  }
}

TEST_CASE("krull_dimension examples") {
  auto F2 = make_field(2);
  auto R = make_poly_ring(F2, {"x", "y", "z"});
  Polynomial x = var(R, "x"), y = var(R, "y"), z = var(R, "z");

  CHECK(krull_dimension(ideal_of(R, {})) == 3);
  CHECK(krull_dimension(ideal_of(R, {x * x + y.pow(3) + z.pow(5)})) == 2);
  CHECK(krull_dimension(ideal_of(R, {x, y, z})) == 0);
  CHECK_THROWS_AS(krull_dimension(ideal_of(R, {Polynomial::one(R)})),
                  EmptyRingError);
}

TEST_CASE("is_m_primary examples") {
  auto F2 = make_field(2);
  auto R3 = make_poly_ring(F2, {"x", "y", "z"});
  Polynomial x = var(R3, "x"), y = var(R3, "y"), z = var(R3, "z");
  Polynomial rel = x * x + y.pow(3) + z.pow(5);
  CHECK(is_m_primary(ideal_of(R3, {y, z}), ideal_of(R3, {rel})));

  auto R2 = make_poly_ring(F2, {"x", "y"});
  Polynomial x2 = var(R2, "x"), y2 = var(R2, "y");
  CHECK_FALSE(is_m_primary(ideal_of(R2, {y2}), IdealHandle(R2, {})));
  CHECK(is_m_primary(ideal_of(R2, {x2, y2}), IdealHandle(R2, {})));
}

TEST_CASE("monomial_irreducible_decomposition examples") {
  auto F2 = make_field(2);
  auto R = make_poly_ring(F2, {"x", "y"});
  Polynomial x = var(R, "x"), y = var(R, "y");

  SUBCASE("(x^2, xy) = (x) cap (x^2, y)") {
    auto comps = monomial_irreducible_decomposition(ideal_of(R, {x * x, x * y}));
    REQUIRE(comps.size() == 2);
    // order-independent check: both expected components occur
    bool has_x = false, has_x2y = false;
    for (const auto& c : comps) {
      if (ideal_equal(c, ideal_of(R, {x}))) has_x = true;
      if (ideal_equal(c, ideal_of(R, {x * x, y}))) has_x2y = true;
    }
    CHECK(has_x);
    CHECK(has_x2y);
    // brute-force cross-check to degree 4
    auto in_all = [&](const ExpVec& m) {
      for (const auto& c : comps)
        if (!mono_member(m, gens_of(c))) return false;
      return true;
    };
    std::vector<ExpVec> gens{{2, 0}, {1, 1}};
    for (const auto& m : monomials_up_to(2, 4))
      CHECK(mono_member(m, gens) == in_all(m));
  }
  SUBCASE("already irreducible: (x^a, y^b)") {
    auto comps =
        monomial_irreducible_decomposition(ideal_of(R, {x.pow(3), y.pow(2)}));
    REQUIRE(comps.size() == 1);
    CHECK(ideal_equal(comps[0], ideal_of(R, {x.pow(3), y.pow(2)})));
  }
  SUBCASE("q*q^[2] for q=(x,y): decomposition re-intersects to the input") {
    IdealHandle q = ideal_of(R, {x, y});
    IdealHandle prod = ideal_product(q, bracket_power_ideal(q, 1));
    auto comps = monomial_irreducible_decomposition(prod);
    REQUIRE(!comps.empty());
    IdealHandle inter = comps[0];
    for (std::size_t i = 1; i < comps.size(); ++i)
      inter = ideal_intersection(inter, comps[i]);
    CHECK(ideal_equal(inter, prod));
    for (const auto& c : comps)
      for (const auto& g : c.generators()) {
        int support = 0;
        for (auto e : g.leading_term().exp)
          if (e) ++support;
        CHECK(support == 1);  // pure variable powers
      }
  }
  SUBCASE("non-monomial input raises") {
    CHECK_THROWS_AS(monomial_irreducible_decomposition(ideal_of(R, {x + y})),
                    NotMonomialError);
  }
}

TEST_CASE("bracket power distributes over sum and product") {
  auto F3 = make_field(3);
  auto R = make_poly_ring(F3, {"x", "y", "z"});
  std::mt19937_64 rng(31);
  auto rand_poly = [&]() {
    std::vector<Term> ts;
    int n = 1 + int(rng() % 3);
    for (int i = 0; i < n; ++i)
      ts.push_back(Term{ExpVec{unsigned(rng() % 3), unsigned(rng() % 3),
                               unsigned(rng() % 2)},
                        Scalar::from_int(F3, 1 + (long long)(rng() % 2))});
    return Polynomial::from_terms(R, ts);
  };
  for (int trial = 0; trial < 10; ++trial) {
    IdealHandle I(R, {rand_poly(), rand_poly()});
    IdealHandle J(R, {rand_poly()});
    if (ideal_is_zero(I) || ideal_is_zero(J)) continue;
    for (unsigned e : {1u, 2u}) {
      CHECK(ideal_equal(bracket_power_ideal(ideal_sum(I, J), e),
                        ideal_sum(bracket_power_ideal(I, e),
                                  bracket_power_ideal(J, e))));
      CHECK(ideal_equal(bracket_power_ideal(ideal_product(I, J), e),
                        ideal_product(bracket_power_ideal(I, e),
                                      bracket_power_ideal(J, e))));
    }
  }
}

TEST_CASE("bracket power of intersections of monomial ideals (regular ring)") {
  auto F2 = make_field(2);
  auto R = make_poly_ring(F2, {"x", "y", "z"});
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<Polynomial> gi, gj;
    for (int i = 0; i < 2; ++i) {
      gi.push_back(mono(R, {unsigned(rng() % 3), unsigned(rng() % 3),
                            unsigned(rng() % 2)}));
      gj.push_back(mono(R, {unsigned(rng() % 2), unsigned(rng() % 3),
                            unsigned(rng() % 3)}));
    }
    IdealHandle I(R, gi), J(R, gj);
    if (ideal_is_zero(I) || ideal_is_zero(J)) continue;
    IdealHandle lhs = bracket_power_ideal(ideal_intersection(I, J), 1);
    IdealHandle rhs = ideal_intersection(bracket_power_ideal(I, 1),
                                         bracket_power_ideal(J, 1));
    CHECK(ideal_equal(lhs, rhs));
  }
}

TEST_CASE("groebner bases satisfy the Buchberger criterion") {
  auto F5 = make_field(5);
  auto R = make_poly_ring(F5, {"x", "y", "z"});
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Term> ts;
    for (int i = 0; i < 3; ++i)
      ts.push_back(Term{ExpVec{unsigned(rng() % 4), unsigned(rng() % 3),
                               unsigned(rng() % 2)},
                        Scalar::from_int(F5, 1 + (long long)(rng() % 4))});
    Polynomial f = Polynomial::from_terms(R, ts);
    std::vector<Term> us;
    for (int i = 0; i < 2; ++i)
      us.push_back(Term{ExpVec{unsigned(rng() % 2), unsigned(rng() % 4),
                               unsigned(rng() % 3)},
                        Scalar::from_int(F5, 1 + (long long)(rng() % 4))});
    Polynomial g = Polynomial::from_terms(R, us);
    IdealHandle I(R, {f, g});
    CHECK(buchberger_criterion_holds(I.groebner_basis(), R->order()));
  }
}

TEST_CASE("bases under a non-default order match a ring built with that order") {
  auto F5 = make_field(5);
  auto Rg = make_poly_ring(F5, {"x", "y"});  // grevlex ring
  auto Rl = make_poly_ring(F5, {"x", "y"}, MonomialOrder::lex(2));
  Polynomial xg = var(Rg, "x"), yg = var(Rg, "y");
  Polynomial xl = var(Rl, "x"), yl = var(Rl, "y");

  IdealHandle Ig(Rg, {xg * xg - yg, yg * yg - xg});
  IdealHandle Il(Rl, {xl * xl - yl, yl * yl - xl});
  const auto& lex_basis = Ig.groebner_basis(MonomialOrder::lex(2));
  const auto& native = Il.groebner_basis();
  REQUIRE(lex_basis.size() == native.size());
  for (std::size_t i = 0; i < native.size(); ++i)
    CHECK(lex_basis[i].terms().size() == native[i].terms().size());
  // membership decided under either order agrees
  for (const auto& f : {xg.pow(4) - xg, xg * yg - xg.pow(3)}) {
    Polynomial fl = Polynomial::from_terms(Rl, f.terms());
    CHECK(normal_form(f, Ig, MonomialOrder::lex(2)).is_zero() ==
          normal_form(fl, Il).is_zero());
    CHECK(ideal_membership(f, Ig) == ideal_membership(fl, Il));
  }
}

TEST_CASE("concurrent basis requests compute once and agree") {
  auto F5 = make_field(5);
  auto R = make_poly_ring(F5, {"x", "y", "z"});
  Polynomial x = var(R, "x"), y = var(R, "y"), z = var(R, "z");
  IdealHandle I(R, {x * x * y - z, y * y - x, z * z - x * y});
  std::vector<std::thread> workers;
  std::vector<std::size_t> sizes(8, 0);
  for (int t = 0; t < 8; ++t)
    workers.emplace_back([&, t] { sizes[t] = I.groebner_basis().size(); });
  for (auto& w : workers) w.join();
  for (int t = 1; t < 8; ++t) CHECK(sizes[t] == sizes[0]);
  // the cached object is shared, not recomputed
  CHECK(I.basis_terms(R->order()).get() == I.basis_terms(R->order()).get());
}

TEST_CASE("resource budget failure is loud") {
  auto F2 = make_field(2);
  auto R = make_poly_ring(F2, {"x", "y"});
  Polynomial x = var(R, "x"), y = var(R, "y");
  ResourceBudget small;
  small.max_degree = 3;
  ResourceBudget saved = ResourceBudget::current();
  ResourceBudget::set_current(small);
  CHECK_THROWS_AS(
      (void)IdealHandle(R, {x.pow(4) + y, y}).groebner_basis(),
      ResourceLimitError);
  ResourceBudget::set_current(saved);
}
