#include <doctest.h>

#include "polyalg/coeffring.hpp"
#include "polyalg/dsl.hpp"
#include "polyalg/format.hpp"
#include "polyalg/random.hpp"

using namespace polyalg;

namespace {

CoeffExpr sym(const std::string& s) { return CoeffExpr::symbol(s); }
P0Poly poly(const std::string& text) { return dsl::parse_poly(text); }

}  // namespace

TEST_CASE("rationals are exact and canonical") {
  CHECK(make_rational(2, 4) == make_rational(1, 2));
  CHECK(rational_string(make_rational(-6, 4)) == "-3/2");
  CHECK(rational_string(make_rational(5)) == "5/1");
  CHECK(parse_rational("-10/4") == make_rational(-5, 2));
  CHECK_THROWS_AS(parse_rational("10/-4"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
}

TEST_CASE("coefficient expressions merge like terms and drop zeros") {
  const CoeffExpr a = sym("a"), b = sym("b");
  CHECK((a + b) - a == b);
  CHECK((a - a).is_zero());
  CHECK((a + b) * (a - b) == a.pow(2) - b.pow(2));
  CHECK((a * CoeffExpr(3)).degree_in("a") == 1);
  CHECK((a.pow(3) * b).degree_in("a") == 3);
  CHECK(CoeffExpr(make_rational(7, 3)).is_constant());
  CHECK((a + CoeffExpr(2)).constant_term() == 2);
  CHECK((a * b + CoeffExpr(1)).symbols() == std::set<std::string>{"a", "b"});
}

TEST_CASE("normalize merges raw terms") {
  Monomial ma{{"a", 1}};
  const CoeffExpr e = CoeffExpr::normalize({{ma, make_rational(1, 2)}, {ma, make_rational(1, 2)}, {{}, 0}});
  CHECK(e == sym("a"));
}

TEST_CASE("substitution and renaming") {
  const CoeffExpr a = sym("a"), b = sym("b");
  const CoeffExpr e = a * a + CoeffExpr(2) * b;
  CHECK(e.substitute({{"a", CoeffExpr(3)}}) == CoeffExpr(9) + CoeffExpr(2) * b);
  CHECK(e.substitute({{"a", b}}) == b * b + CoeffExpr(2) * b);
  CHECK(e.rename({{"b", "c"}}) == a * a + CoeffExpr(2) * sym("c"));
}

TEST_CASE("P0 polynomials: degree, leading coefficient, trimming") {
  CHECK(!P0Poly().degree());
  CHECK(P0Poly(5).degree() == 0u);
  const P0Poly p = poly("4*h*P0^3 + 2*a*P0");
  CHECK(p.degree() == 3u);
  CHECK(p.leading() == CoeffExpr(4) * sym("h"));
  CHECK(p.coeff(2).is_zero());
  CHECK(p.coeff(7).is_zero());
  CHECK((p - p).is_zero());
  CHECK(p.symbols() == std::set<std::string>{"a", "h"});
}

TEST_CASE("affine substitution examples") {
  // (P0 + 1)^2 = P0^2 + 2 P0 + 1
  CHECK((P0Poly::x() * P0Poly::x()).shifted(CoeffExpr(1)) == poly("P0^2 + 2*P0 + 1"));
  // phi(Lambda - P0) for phi = 2 P0
  CHECK(poly("2*P0").substitute_affine(sym("Lambda"), -1) == poly("2*Lambda - 2*P0"));
  CHECK(poly("P0^3").substitute_affine(CoeffExpr(0), -1) == poly("-P0^3"));
  CHECK_THROWS_AS(poly("P0").substitute_affine(CoeffExpr(0), 2), Error);
}

TEST_CASE("evaluate at a coefficient expression") {
  const P0Poly p = poly("a*P0^2 + b*P0 + c");
  CHECK(p.evaluate(CoeffExpr(-1)) == sym("a") - sym("b") + sym("c"));
  CHECK(p.evaluate(CoeffExpr(0)) == sym("c"));
}

TEST_CASE("pp_arith matches the operators") {
  const P0Poly p = poly("P0^2 - a"), q = poly("3*P0 + b");
  CHECK(pp_arith(p, q, ArithOp::add) == p + q);
  CHECK(pp_arith(p, q, ArithOp::sub) == p - q);
  CHECK(pp_arith(p, q, ArithOp::mul) == p * q);
}

TEST_CASE("ring axioms on 200 random instances") {
  RandomAlgebras gen(7);
  for (int i = 0; i < 200; ++i) {
    const bool symbolic = i % 2 == 0;
    const P0Poly p = gen.poly(gen.uniform(0, 4), symbolic);
    const P0Poly q = gen.poly(gen.uniform(0, 4), symbolic);
    const P0Poly r = gen.poly(gen.uniform(0, 4), symbolic);
    CAPTURE(to_text(p));
    CAPTURE(to_text(q));
    CAPTURE(to_text(r));
    REQUIRE(p + q == q + p);
    REQUIRE(p * q == q * p);
    REQUIRE((p + q) + r == p + (q + r));
    REQUIRE((p * q) * r == p * (q * r));
    REQUIRE(p * (q + r) == p * q + p * r);
    REQUIRE(p + P0Poly() == p);
    REQUIRE(p * P0Poly(1) == p);
    REQUIRE((p - p).is_zero());
    if (p.degree() && q.degree()) REQUIRE((p * q).degree() == *p.degree() + *q.degree());
  }
}

TEST_CASE("affine substitution is a ring homomorphism and composes") {
  RandomAlgebras gen(11);
  for (int i = 0; i < 100; ++i) {
    const P0Poly p = gen.poly(gen.uniform(0, 5), true);
    const P0Poly q = gen.poly(gen.uniform(0, 5), true);
    const CoeffExpr s = gen.coeff(true), t = gen.coeff(true);
    const int sign = i % 2 == 0 ? 1 : -1;
    REQUIRE((p * q).substitute_affine(s, sign) == p.substitute_affine(s, sign) * q.substitute_affine(s, sign));
    REQUIRE((p + q).substitute_affine(s, sign) == p.substitute_affine(s, sign) + q.substitute_affine(s, sign));
    REQUIRE(p.shifted(s).shifted(t) == p.shifted(s + t));
    REQUIRE(p.shifted(s).shifted(-s) == p);
    REQUIRE(p.substitute_affine(CoeffExpr(0), -1).substitute_affine(CoeffExpr(0), -1) == p);
    // Evaluating the shifted polynomial at 0 gives p(s).
    REQUIRE(p.shifted(s).evaluate(CoeffExpr(0)) == p.evaluate(s));
  }
}
