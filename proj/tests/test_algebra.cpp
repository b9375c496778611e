#include <doctest.h>

#include "polyalg/algebra.hpp"
#include "polyalg/dsl.hpp"
#include "polyalg/format.hpp"
#include "polyalg/matrixrep.hpp"
#include "polyalg/random.hpp"

using namespace polyalg;

namespace {

P0Poly poly(const std::string& text) { return dsl::parse_poly(text); }

EnvelopeElement mono(unsigned a, const P0Poly& f, unsigned b) { return EnvelopeElement::monomial(a, f, b); }

// Small random envelope element: up to three monomials with raise/lower powers <= 2.
EnvelopeElement random_element(RandomAlgebras& gen) {
  EnvelopeElement e;
  const unsigned terms = gen.uniform(1, 3);
  for (unsigned i = 0; i < terms; ++i) e += mono(gen.uniform(0, 2), gen.poly(gen.uniform(0, 2), false), gen.uniform(0, 2));
  return e;
}

}  // namespace

TEST_CASE("builtin catalog") {
  CHECK(builtin_names() == std::set<std::string>{"boson", "higgs", "quadratic", "su11", "su2"});
  CHECK(builtin("su2").phi() == poly("2*P0"));
  CHECK(builtin("su11").phi() == poly("-2*P0"));
  CHECK(builtin("boson").phi() == poly("-1"));
  CHECK(builtin("higgs").phi() == poly("4*h*P0^3 + 2*a*P0"));
  CHECK(builtin("quadratic").phi() == poly("a*P0^2 + b*P0 + c"));
  CHECK(builtin("higgs").centrals() == std::set<std::string>{"a", "h"});
  CHECK(builtin("higgs").order() == 3u);
  CHECK(builtin("boson").casimir_value() == CoeffExpr(1));
  CHECK(!builtin("su2").casimir_value());
  CHECK(builtin("su2").casimir_symbol() == "C_J");
  CHECK(is_builtin("quadratic"));
  CHECK(!is_builtin("nonesuch"));
  CHECK_THROWS_AS(builtin("nonesuch"), CatalogError);
}

TEST_CASE("solve_g examples") {
  CHECK(solve_g(poly("2*P0")) == poly("P0^2 + P0"));
  CHECK(solve_g(poly("-2*P0")) == poly("-P0^2 - P0"));
  CHECK(solve_g(poly("-1")) == poly("-P0"));
  CHECK(solve_g(P0Poly()).is_zero());
  CHECK(solve_g(poly("a*P0^2 + b*P0 + c")) ==
        poly("1/3*a*P0^3 + 1/2*a*P0^2 + 1/2*b*P0^2 + 1/6*a*P0 + 1/2*b*P0 + c*P0"));
}

TEST_CASE("higgs g agrees with the partial sums of phi") {
  const P0Poly phi = builtin("higgs").phi();
  const P0Poly g = solve_g(phi);
  CHECK(g.degree() == 4u);
  CoeffExpr partial;
  for (long n = 0; n <= 10; ++n) {
    if (n > 0) partial += phi.evaluate(CoeffExpr(n));
    CAPTURE(n);
    CHECK(g.evaluate(CoeffExpr(n)) == partial);
  }
}

TEST_CASE("casimir examples") {
  CHECK(casimir(builtin("su2")) == mono(1, 1, 1) + EnvelopeElement(poly("P0^2 - P0")));
  CHECK(casimir(builtin("boson")) == mono(1, 1, 1) + EnvelopeElement(poly("1 - P0")));
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    CHECK(casimir_lowered_form(builtin(name)) == casimir(builtin(name)));
  }
}

TEST_CASE("boson Casimir is the identity on Fock interior states") {
  const Rep rep = rep_boson(12);
  const Eigen::MatrixXd c = to_matrix(casimir(builtin("boson")), rep);
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(rep.dim, rep.dim);
  CHECK(interior_max(c - id, rep.exact_interior()) < 1e-12);
}

TEST_CASE("recenter examples") {
  const PolyAlgebra k = recenter(builtin("su2"), CoeffExpr(-1));
  CHECK(k.phi() == poly("2*P0 + 2"));
  const PolyAlgebra q = recenter(builtin("quadratic"), make_rational(1, 2));
  CHECK(q.phi() == poly("a*P0^2 - a*P0 + b*P0 + 1/4*a - 1/2*b + c"));
  // Pinned Casimir follows the shift: C_new = C_old - g(-s).
  const PolyAlgebra b = recenter(builtin("boson"), CoeffExpr(3));
  CHECK(b.phi() == poly("-1"));
  CHECK(b.casimir_value() == CoeffExpr(-2));
  CHECK(recenter(recenter(builtin("higgs"), CoeffExpr::symbol("s")), -CoeffExpr::symbol("s")).phi() ==
        builtin("higgs").phi());
}

TEST_CASE("normal ordering of simple products") {
  const PolyAlgebra quad = builtin("quadratic");
  const auto p = EnvelopeElement::p_plus(), m = EnvelopeElement::p_minus(), z = EnvelopeElement::p_zero();
  // P- P+ = P+ P- - phi(P0)
  CHECK(env_mul(m, p, quad) == mono(1, 1, 1) - EnvelopeElement(quad.phi()));
  // P+ P- P+ = P+^2 P- - P+ phi(P0)
  CHECK(env_mul(mono(1, 1, 1), p, quad) == mono(2, 1, 1) - mono(1, quad.phi(), 0));
  // P0 P+ = P+ (P0 + 1), P- P0 = (P0 + 1) P-
  CHECK(env_mul(z, p, quad) == mono(1, poly("P0 + 1"), 0));
  CHECK(env_mul(m, z, quad) == mono(0, poly("P0 + 1"), 1));
  CHECK(env_commutator(z, env_mul(p, p, quad), quad) == mono(2, 1, 0) + mono(2, 1, 0));
  CHECK(env_commutator(z, m, quad) == -m);
  CHECK(env_commutator(p, m, quad) == EnvelopeElement(quad.phi()));
}

TEST_CASE("normal ordering agrees with su2 matrices at j = 2") {
  const PolyAlgebra su2 = builtin("su2");
  const Rep rep = rep_su2(2.0);
  RandomAlgebras gen(5);
  for (int i = 0; i < 40; ++i) {
    const EnvelopeElement x = random_element(gen), y = random_element(gen);
    const Eigen::MatrixXd lhs = to_matrix(env_mul(x, y, su2), rep);
    const Eigen::MatrixXd rhs = to_matrix(x, rep) * to_matrix(y, rep);
    CAPTURE(to_text(x));
    CAPTURE(to_text(y));
    REQUIRE((lhs - rhs).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("envelope multiplication is associative") {
  RandomAlgebras gen(19);
  for (int i = 0; i < 30; ++i) {
    const PolyAlgebra alg = gen.algebra("R", gen.uniform(0, 3), true);
    const EnvelopeElement x = random_element(gen), y = random_element(gen), z = random_element(gen);
    CAPTURE(to_text(alg.phi()));
    REQUIRE(env_mul(env_mul(x, y, alg), z, alg) == env_mul(x, env_mul(y, z, alg), alg));
  }
}

TEST_CASE("Casimir centrality and Jacobi for 50 random degree-5 algebras") {
  RandomAlgebras gen(23);
  const auto p = EnvelopeElement::p_plus(), m = EnvelopeElement::p_minus(), z = EnvelopeElement::p_zero();
  for (int i = 0; i < 50; ++i) {
    const PolyAlgebra alg = gen.algebra("R", 5, i % 2 == 0);
    const EnvelopeElement c = casimir(alg);
    CAPTURE(to_text(alg.phi()));
    REQUIRE(env_commutator(c, p, alg).is_zero());
    REQUIRE(env_commutator(c, m, alg).is_zero());
    REQUIRE(env_commutator(c, z, alg).is_zero());
    REQUIRE(jacobi_check(alg));
  }
}

TEST_CASE("a wrong g is detected as non-central") {
  const PolyAlgebra su2 = builtin("su2");
  const EnvelopeElement wrong = mono(1, 1, 1) + EnvelopeElement(poly("P0^2 + P0"));
  CHECK(!env_commutator(wrong, EnvelopeElement::p_plus(), su2).is_zero());
}
