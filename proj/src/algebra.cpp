#include "polyalg/algebra.hpp"

namespace polyalg {

PolyAlgebra::PolyAlgebra(std::string name, P0Poly phi, std::string casimir_symbol,
                         std::optional<CoeffExpr> casimir_value)
    : name_(std::move(name)),
      phi_(std::move(phi)),
      centrals_(phi_.symbols()),
      casimir_symbol_(casimir_symbol.empty() ? default_casimir_symbol(name_) : std::move(casimir_symbol)),
      casimir_value_(std::move(casimir_value)) {}

CoeffExpr PolyAlgebra::casimir_coefficient() const {
  return casimir_value_ ? *casimir_value_ : CoeffExpr::symbol(casimir_symbol_);
}

PolyAlgebra PolyAlgebra::renamed(std::string name) const {
  PolyAlgebra out = *this;
  out.name_ = std::move(name);
  return out;
}

std::string default_casimir_symbol(const std::string& algebra_name) { return "C_" + algebra_name; }

P0Poly solve_g(const P0Poly& phi) {
  const auto deg = phi.degree();
  if (!deg) return {};
  const unsigned m = *deg;

  // Row k of the triangular system: sum_{i>k} b_i C(i,k) (-1)^(i-k+1) = phi_k.
  std::vector<CoeffExpr> b(m + 2);
  for (int k = static_cast<int>(m); k >= 0; --k) {
    CoeffExpr rhs = phi.coeff(static_cast<unsigned>(k));
    for (unsigned i = static_cast<unsigned>(k) + 2; i <= m + 1; ++i) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), i, static_cast<unsigned>(k));
      Rational factor(binom);
      if ((i - static_cast<unsigned>(k)) % 2 == 0) factor = -factor;
      rhs -= b[i] * CoeffExpr(factor);
    }
    b[static_cast<unsigned>(k) + 1] = rhs * CoeffExpr(make_rational(1, k + 1));
  }
  b[0] = CoeffExpr();
  return P0Poly(std::move(b));
}

namespace {

P0Poly linear(long slope) { return P0Poly::monomial(CoeffExpr(slope), 1); }

}  // namespace

const std::set<std::string>& builtin_names() {
  static const std::set<std::string> names{"boson", "su2", "su11", "higgs", "quadratic"};
  return names;
}

bool is_builtin(const std::string& name) { return builtin_names().count(name) > 0; }

PolyAlgebra builtin(const std::string& name) {
  if (name == "boson") {
    // P+ = a+, P- = a-, P0 = N: [a+, a-] = -1 and P+P- - P0 + 1 = 1 on Fock space.
    return PolyAlgebra("boson", P0Poly(-1), "C_N", CoeffExpr(1));
  }
  if (name == "su2") return PolyAlgebra("su2", linear(2), "C_J");
  if (name == "su11") return PolyAlgebra("su11", linear(-2), "C_K");
  if (name == "higgs") {
    P0Poly phi = P0Poly::monomial(CoeffExpr(4) * CoeffExpr::symbol("h"), 3) +
                 P0Poly::monomial(CoeffExpr(2) * CoeffExpr::symbol("a"), 1);
    return PolyAlgebra("higgs", phi, "C_H");
  }
  if (name == "quadratic") {
    P0Poly phi = P0Poly(std::vector<CoeffExpr>{CoeffExpr::symbol("c"), CoeffExpr::symbol("b"),
                                               CoeffExpr::symbol("a")});
    return PolyAlgebra("quadratic", phi, "C_Q");
  }
  throw CatalogError("unknown builtin algebra '" + name + "'");
}

PolyAlgebra recenter(const PolyAlgebra& alg, const CoeffExpr& shift) {
  // New P0 = old P0 + shift, so phi_new(x) = phi(x - shift).
  P0Poly phi = alg.phi().substitute_affine(-shift, +1);
  std::optional<CoeffExpr> value;
  if (alg.casimir_value()) {
    // g_new(x) = g(x - shift) - g(-shift), hence C_new = C_old - g(-shift).
    value = *alg.casimir_value() - solve_g(alg.phi()).evaluate(-shift);
  }
  return PolyAlgebra(alg.name(), std::move(phi), alg.casimir_symbol(), std::move(value));
}

EnvelopeElement casimir(const PolyAlgebra& alg) {
  const P0Poly g = solve_g(alg.phi());
  return EnvelopeElement::monomial(1, P0Poly(1), 1) + EnvelopeElement(g.shifted(CoeffExpr(-1)));
}

EnvelopeElement casimir_lowered_form(const PolyAlgebra& alg) {
  const P0Poly g = solve_g(alg.phi());
  return env_mul(EnvelopeElement::p_minus(), EnvelopeElement::p_plus(), alg) + EnvelopeElement(g);
}

bool jacobi_check(const PolyAlgebra& alg) {
  const auto p = EnvelopeElement::p_plus();
  const auto m = EnvelopeElement::p_minus();
  const auto z = EnvelopeElement::p_zero();
  auto br = [&](const EnvelopeElement& a, const EnvelopeElement& b) { return env_commutator(a, b, alg); };
  EnvelopeElement total = br(br(p, m), z) + br(br(m, z), p) + br(br(z, p), m);
  return total.is_zero();
}

}  // namespace polyalg
