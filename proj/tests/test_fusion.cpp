#include <doctest.h>

#include "polyalg/dsl.hpp"
#include "polyalg/format.hpp"
#include "polyalg/fusion.hpp"
#include "polyalg/random.hpp"

using namespace polyalg;

namespace {

P0Poly poly(const std::string& text) { return dsl::parse_poly(text); }
CoeffExpr sym(const std::string& s) { return CoeffExpr::symbol(s); }

FuseOptions unit_mu() {
  FuseOptions o;
  o.mu2_value = CoeffExpr(1);
  return o;
}

}  // namespace

TEST_CASE("boson pairs give the linear algebras") {
  const PolyAlgebra b = builtin("boson");
  CHECK(fuse(FusionKind::J, b, b, unit_mu()).algebra.phi() == poly("2*P0"));
  CHECK(fuse(FusionKind::K, b, b, unit_mu()).algebra.phi() == poly("-2*P0 - 1"));
  CHECK(recenter(fuse(FusionKind::K, b, b, unit_mu()).algebra, make_rational(1, 2)).phi() == poly("-2*P0"));
  // With mu2 left symbolic the result is scaled.
  CHECK(fuse(FusionKind::J, b, b).algebra.phi() == poly("2*mu2*P0"));
}

TEST_CASE("spin coupled to an oscillator") {
  const FusedAlgebra f = fuse(FusionKind::J, builtin("su2"), builtin("boson"));
  CHECK(f.algebra.phi() == poly("-3*mu2*P0^2 - 2*Lambda*mu2*P0 + mu2*P0 + C_J*mu2 + Lambda^2*mu2 + Lambda*mu2"));
  CHECK(f.ledger.casimir_l == "C_J");
  CHECK(f.ledger.casimir_m == "C_N");
  CHECK(f.ledger.casimir_m_value == CoeffExpr(1));
  CHECK(f.algebra.name() == "J(su2,boson)");
  CHECK(f.algebra.centrals() == std::set<std::string>{"C_J", "Lambda", "mu2"});
}

TEST_CASE("spin coupled to su(1,1) gives a Higgs-type cubic") {
  const FusedAlgebra f = fuse(FusionKind::J, builtin("su2"), builtin("su11"));
  CHECK(f.algebra.phi() ==
        poly("4*mu2*P0^3 - 2*C_J*mu2*P0 + 2*C_K*mu2*P0 - 4*Lambda^2*mu2*P0 + 2*C_J*Lambda*mu2 + 2*C_K*Lambda*mu2"));
  CHECK(fused_order_check(f, 1, 1));
}

TEST_CASE("two copies of su(1,1)") {
  FuseOptions opts;
  opts.casimir_l = "C_L";
  opts.casimir_m = "C_M";
  const FusedAlgebra f = fuse(FusionKind::J, builtin("su11"), builtin("su11"), opts);
  CHECK(f.algebra.phi() == poly("-4*mu2*P0^3 - 2*C_L*mu2*P0 - 2*C_M*mu2*P0 + 4*Lambda^2*mu2*P0 + 2*C_L*Lambda*mu2 - 2*C_M*Lambda*mu2"));
  // Default names are made distinct.
  const FusedAlgebra d = fuse(FusionKind::J, builtin("su11"), builtin("su11"));
  CHECK(d.ledger.casimir_l == "C_K");
  CHECK(d.ledger.casimir_m == "C_K_2");
}

TEST_CASE("symbol collisions rename the right factor") {
  const PolyAlgebra q = builtin("quadratic");
  const FusedAlgebra f = fuse(FusionKind::J, q, q);
  CHECK(f.ledger.m_renames == std::map<std::string, std::string>{{"a", "a_2"}, {"b", "b_2"}, {"c", "c_2"}});
  CHECK(f.algebra.centrals() ==
        std::set<std::string>{"C_Q", "C_Q_2", "Lambda", "a", "a_2", "b", "b_2", "c", "c_2", "mu2"});
  CHECK(f.algebra.order() == 5u);

  // A right factor already using a suffixed name does not alias.
  const PolyAlgebra m("M", poly("a*P0 + a_2"));
  const FusedAlgebra g = fuse(FusionKind::J, q, m);
  CHECK(g.ledger.m_renames.at("a") != "a_2");
  CHECK(g.algebra.centrals().count("a_2") == 1);

  // Central symbols named like the fusion's own symbols are also avoided.
  const PolyAlgebra clash("X", poly("Lambda*P0 + mu2"));
  const FusedAlgebra h = fuse(FusionKind::K, clash, builtin("su2"));
  CHECK(h.ledger.lambda != "Lambda");
  CHECK(h.ledger.mu2 != "mu2");
}

TEST_CASE("renaming gives up after exhausting suffixes") {
  std::string text = "P0 + x";
  for (int i = 2; i <= 99; ++i) text += " + x_" + std::to_string(i);
  const PolyAlgebra crowded("X", poly(text));
  CHECK_THROWS_AS(fuse(FusionKind::J, crowded, crowded), FusionError);
}

TEST_CASE("specialize") {
  const FusedAlgebra w = fuse(FusionKind::J, builtin("su2"), builtin("su11"));
  const PolyAlgebra hw = specialize(w, {{"C_K", -sym("C_J")}, {"mu2", sym("h")}});
  CHECK(hw.phi() == poly("4*h*P0^3 - 4*C_J*h*P0 - 4*Lambda^2*h*P0"));
  // Higgs form 4 h P0^3 + 2 a P0 with a = -2 h (C_J + Lambda^2).
  CHECK(hw.phi().coeff(1) == CoeffExpr(2) * (CoeffExpr(-2) * sym("h") * (sym("C_J") + sym("Lambda").pow(2))));

  CHECK_THROWS_AS(specialize(w, {{"C_K", sym("C_J")}, {"C_J", sym("C_K")}}), SpecializationError);
  CHECK_THROWS_AS(specialize(w, {{"mu2", sym("mu2")}}), SpecializationError);

  const PolyAlgebra b = specialize(builtin("quadratic"), {{"a", CoeffExpr(0)}, {"b", CoeffExpr(2)}, {"c", CoeffExpr(0)}});
  CHECK(b.phi() == poly("2*P0"));
}

TEST_CASE("order of fused algebras") {
  CHECK(fuse(FusionKind::K, builtin("quadratic"), builtin("higgs")).algebra.order() == 6u);
  CHECK(fuse(FusionKind::J, builtin("quadratic"), builtin("boson")).algebra.order() == 3u);
  CHECK(fuse(FusionKind::J, builtin("higgs"), builtin("higgs")).algebra.order() == 7u);

  RandomAlgebras gen(31);
  for (int i = 0; i < 40; ++i) {
    const unsigned dl = gen.uniform(0, 4), dm = gen.uniform(0, 4);
    const PolyAlgebra l = gen.algebra("L", dl, i % 2 == 0), m = gen.algebra("M", dm, i % 3 == 0);
    const FusionKind kind = i % 2 == 0 ? FusionKind::J : FusionKind::K;
    CAPTURE(to_text(l.phi()));
    CAPTURE(to_text(m.phi()));
    REQUIRE(fused_order_check(fuse(kind, l, m), dl, dm));
  }
}

TEST_CASE("zero structure polynomial fuses without an order claim") {
  const PolyAlgebra zero("Z", P0Poly());
  const FusedAlgebra f = fuse(FusionKind::J, zero, builtin("su2"));
  CHECK(!fused_order_check(f, 0, 1));
}

TEST_CASE("fusion kind names") {
  CHECK(to_string(FusionKind::J) == "J");
  CHECK(parse_fusion_kind("K") == FusionKind::K);
  CHECK_THROWS_AS(parse_fusion_kind("L"), FusionError);
}
