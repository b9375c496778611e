#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polyalg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact rational number, always kept in lowest terms with a positive denominator.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
/// Parses "p", "-p" or "p/q". Throws Error on malformed input or zero denominator.
Rational parse_rational(const std::string& text);
/// "p/q" with q printed even when it is 1.
std::string rational_string(const Rational& r);

/// Exponent vector over central symbols, keyed by symbol name (lexicographic order).
using Monomial = std::map<std::string, unsigned>;

/// Exact polynomial in commuting central symbols with rational coefficients.
///
/// Terms are kept in a sorted map and zero coefficients are never stored, so
/// structural equality coincides with mathematical equality.
class CoeffExpr {
 public:
  using TermMap = std::map<Monomial, Rational>;

  CoeffExpr() = default;
  CoeffExpr(const Rational& value);  // NOLINT(google-explicit-constructor)
  CoeffExpr(long value);             // NOLINT(google-explicit-constructor)

  static CoeffExpr symbol(const std::string& name, unsigned exponent = 1);
  /// Merges like terms, drops zero coefficients and zero exponents.
  static CoeffExpr normalize(const std::vector<std::pair<Monomial, Rational>>& raw);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of the symbol-free term (zero when absent).
  Rational constant_term() const;
  std::set<std::string> symbols() const;
  /// Highest total exponent of `name` over all terms.
  unsigned degree_in(const std::string& name) const;

  /// Simultaneous substitution of symbols by expressions.
  CoeffExpr substitute(const std::map<std::string, CoeffExpr>& values) const;
  CoeffExpr rename(const std::map<std::string, std::string>& names) const;
  CoeffExpr pow(unsigned exponent) const;

  CoeffExpr& operator+=(const CoeffExpr& other);
  CoeffExpr& operator-=(const CoeffExpr& other);
  CoeffExpr& operator*=(const CoeffExpr& other);

  friend CoeffExpr operator+(CoeffExpr lhs, const CoeffExpr& rhs) { return lhs += rhs; }
  friend CoeffExpr operator-(CoeffExpr lhs, const CoeffExpr& rhs) { return lhs -= rhs; }
  friend CoeffExpr operator*(const CoeffExpr& lhs, const CoeffExpr& rhs);
  friend CoeffExpr operator-(const CoeffExpr& value);
  friend bool operator==(const CoeffExpr& lhs, const CoeffExpr& rhs) {
    return lhs.terms_ == rhs.terms_;
  }
  friend bool operator<(const CoeffExpr& lhs, const CoeffExpr& rhs) { return lhs.terms_ < rhs.terms_; }

 private:
  void add_term(const Monomial& mono, const Rational& value);

  TermMap terms_;
};

/// Univariate polynomial in the diagonal generator P0 with CoeffExpr coefficients.
///
/// The coefficient vector is indexed by power and trimmed so the highest
/// stored coefficient is nonzero; the zero polynomial stores nothing and has
/// no degree.
class P0Poly {
 public:
  P0Poly() = default;
  explicit P0Poly(std::vector<CoeffExpr> coeffs);
  P0Poly(const CoeffExpr& constant);  // NOLINT(google-explicit-constructor)
  P0Poly(long constant);              // NOLINT(google-explicit-constructor)

  /// c * P0^power
  static P0Poly monomial(const CoeffExpr& c, unsigned power);
  /// The polynomial P0.
  static P0Poly x();

  const std::vector<CoeffExpr>& coeffs() const { return coeffs_; }
  std::optional<unsigned> degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  CoeffExpr coeff(unsigned power) const;
  CoeffExpr leading() const;
  std::set<std::string> symbols() const;

  /// p(alpha + sign * P0), expanded.
  P0Poly substitute_affine(const CoeffExpr& alpha, int sign) const;
  /// p(P0 + k)
  P0Poly shifted(const CoeffExpr& k) const { return substitute_affine(k, +1); }
  P0Poly substitute_symbols(const std::map<std::string, CoeffExpr>& values) const;
  P0Poly rename(const std::map<std::string, std::string>& names) const;
  /// Evaluates at a coefficient-ring value of P0.
  CoeffExpr evaluate(const CoeffExpr& at) const;

  P0Poly& operator+=(const P0Poly& other);
  P0Poly& operator-=(const P0Poly& other);
  P0Poly& operator*=(const P0Poly& other);

  friend P0Poly operator+(P0Poly lhs, const P0Poly& rhs) { return lhs += rhs; }
  friend P0Poly operator-(P0Poly lhs, const P0Poly& rhs) { return lhs -= rhs; }
  friend P0Poly operator*(const P0Poly& lhs, const P0Poly& rhs);
  friend P0Poly operator-(const P0Poly& p);
  friend bool operator==(const P0Poly& lhs, const P0Poly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

 private:
  void trim();

  std::vector<CoeffExpr> coeffs_;
};

enum class ArithOp { add, sub, mul };

/// Dispatching form of the P0Poly ring operations.
P0Poly pp_arith(const P0Poly& p, const P0Poly& q, ArithOp op);

}  // namespace polyalg
