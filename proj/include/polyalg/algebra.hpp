#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "polyalg/coeffring.hpp"

namespace polyalg {

class CatalogError : public Error {
 public:
  using Error::Error;
};

/// Three-dimensional polynomial algebra: [P0, P+-] = +-P+-, [P+, P-] = phi(P0).
///
/// The coefficients of phi live in the coefficient ring, so any symbol
/// occurring in phi is a central element of the algebra. The Casimir element
/// is referred to by `casimir_symbol` when it appears as a coefficient of
/// another algebra (after fusion); algebras whose defining realization pins
/// the Casimir to a known value (the Fock-space boson) carry it in
/// `casimir_value` and fusion substitutes it directly.
class PolyAlgebra {
 public:
  PolyAlgebra(std::string name, P0Poly phi, std::string casimir_symbol = {},
              std::optional<CoeffExpr> casimir_value = std::nullopt);

  const std::string& name() const { return name_; }
  const P0Poly& phi() const { return phi_; }
  std::optional<unsigned> order() const { return phi_.degree(); }
  /// Exactly the symbols that occur in phi.
  const std::set<std::string>& centrals() const { return centrals_; }
  const std::string& casimir_symbol() const { return casimir_symbol_; }
  const std::optional<CoeffExpr>& casimir_value() const { return casimir_value_; }

  /// The Casimir as a coefficient-ring element: its pinned value, or its symbol.
  CoeffExpr casimir_coefficient() const;

  PolyAlgebra renamed(std::string name) const;

 private:
  std::string name_;
  P0Poly phi_;
  std::set<std::string> centrals_;
  std::string casimir_symbol_;
  std::optional<CoeffExpr> casimir_value_;
};

/// Default name of the central symbol standing for an algebra's Casimir.
std::string default_casimir_symbol(const std::string& algebra_name);

/// Unique g with g(x) - g(x-1) = phi(x) and zero constant term.
P0Poly solve_g(const P0Poly& phi);

/// boson | su2 | su11 | higgs | quadratic
PolyAlgebra builtin(const std::string& name);
bool is_builtin(const std::string& name);
const std::set<std::string>& builtin_names();

/// Algebra in the shifted diagonal generator P0' = P0 + shift.
PolyAlgebra recenter(const PolyAlgebra& alg, const CoeffExpr& shift);

/// Finite sum of normal-ordered monomials P+^a f(P0) P-^b.
class EnvelopeElement {
 public:
  using Key = std::pair<unsigned, unsigned>;  // (raise power, lower power)
  using MonomialMap = std::map<Key, P0Poly>;

  EnvelopeElement() = default;
  EnvelopeElement(const P0Poly& middle);  // NOLINT(google-explicit-constructor)

  static EnvelopeElement monomial(unsigned raise, const P0Poly& middle, unsigned lower);
  static EnvelopeElement p_plus() { return monomial(1, P0Poly(1), 0); }
  static EnvelopeElement p_minus() { return monomial(0, P0Poly(1), 1); }
  static EnvelopeElement p_zero() { return EnvelopeElement(P0Poly::x()); }

  const MonomialMap& monomials() const { return monomials_; }
  bool is_zero() const { return monomials_.empty(); }
  P0Poly coefficient(unsigned raise, unsigned lower) const;

  EnvelopeElement& operator+=(const EnvelopeElement& other);
  EnvelopeElement& operator-=(const EnvelopeElement& other);
  friend EnvelopeElement operator+(EnvelopeElement a, const EnvelopeElement& b) { return a += b; }
  friend EnvelopeElement operator-(EnvelopeElement a, const EnvelopeElement& b) { return a -= b; }
  friend EnvelopeElement operator-(const EnvelopeElement& a);
  friend bool operator==(const EnvelopeElement& a, const EnvelopeElement& b) {
    return a.monomials_ == b.monomials_;
  }

 private:
  void add(const Key& key, const P0Poly& middle);

  MonomialMap monomials_;
};

/// x * y reduced to normal order using the relations of `alg`.
EnvelopeElement env_mul(const EnvelopeElement& x, const EnvelopeElement& y, const PolyAlgebra& alg);
EnvelopeElement env_commutator(const EnvelopeElement& x, const EnvelopeElement& y, const PolyAlgebra& alg);

/// P+ P- + g(P0 - 1)
EnvelopeElement casimir(const PolyAlgebra& alg);
/// P- P+ + g(P0), rewritten to normal order.
EnvelopeElement casimir_lowered_form(const PolyAlgebra& alg);

bool jacobi_check(const PolyAlgebra& alg);

}  // namespace polyalg
