#include "polyalg/coeffring.hpp"

#include <algorithm>
#include <cctype>

namespace polyalg {

Rational make_rational(long num, long den) {
  if (den == 0) throw Error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  auto valid_int = [](const std::string& s, bool allow_sign) {
    std::size_t start = (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start) return false;
    return std::all_of(s.begin() + static_cast<long>(start), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
  };
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) throw Error("malformed rational '" + text + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw Error("rational with zero denominator '" + text + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string rational_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// ---------------------------------------------------------------- CoeffExpr

CoeffExpr::CoeffExpr(const Rational& value) {
  if (value != 0) terms_.emplace(Monomial{}, value);
}

CoeffExpr::CoeffExpr(long value) : CoeffExpr(Rational(value)) {}

CoeffExpr CoeffExpr::symbol(const std::string& name, unsigned exponent) {
  CoeffExpr e;
  Monomial m;
  if (exponent > 0) m.emplace(name, exponent);
  e.terms_.emplace(std::move(m), Rational(1));
  return e;
}

CoeffExpr CoeffExpr::normalize(const std::vector<std::pair<Monomial, Rational>>& raw) {
  CoeffExpr e;
  for (const auto& [mono, value] : raw) {
    Monomial clean;
    for (const auto& [name, exp] : mono)
      if (exp > 0) clean.emplace(name, exp);
    Rational v = value;
    v.canonicalize();
    e.add_term(clean, v);
  }
  return e;
}

void CoeffExpr::add_term(const Monomial& mono, const Rational& value) {
  if (value == 0) return;
  auto [it, inserted] = terms_.emplace(mono, value);
  if (inserted) return;
  it->second += value;
  if (it->second == 0) terms_.erase(it);
}

bool CoeffExpr::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational CoeffExpr::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::set<std::string> CoeffExpr::symbols() const {
  std::set<std::string> out;
  for (const auto& [mono, value] : terms_)
    for (const auto& [name, exp] : mono) out.insert(name);
  return out;
}

unsigned CoeffExpr::degree_in(const std::string& name) const {
  unsigned best = 0;
  for (const auto& [mono, value] : terms_) {
    auto it = mono.find(name);
    if (it != mono.end()) best = std::max(best, it->second);
  }
  return best;
}

CoeffExpr CoeffExpr::substitute(const std::map<std::string, CoeffExpr>& values) const {
  CoeffExpr out;
  for (const auto& [mono, value] : terms_) {
    Monomial kept;
    CoeffExpr factor(value);
    for (const auto& [name, exp] : mono) {
      auto it = values.find(name);
      if (it == values.end())
        kept.emplace(name, exp);
      else
        factor *= it->second.pow(exp);
    }
    CoeffExpr rest;
    rest.terms_.emplace(std::move(kept), Rational(1));
    out += factor * rest;
  }
  return out;
}

CoeffExpr CoeffExpr::rename(const std::map<std::string, std::string>& names) const {
  std::map<std::string, CoeffExpr> values;
  for (const auto& [from, to] : names) values.emplace(from, symbol(to));
  return substitute(values);
}

CoeffExpr CoeffExpr::pow(unsigned exponent) const {
  CoeffExpr result(1);
  CoeffExpr base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

CoeffExpr& CoeffExpr::operator+=(const CoeffExpr& other) {
  for (const auto& [mono, value] : other.terms_) add_term(mono, value);
  return *this;
}

CoeffExpr& CoeffExpr::operator-=(const CoeffExpr& other) {
  for (const auto& [mono, value] : other.terms_) add_term(mono, -value);
  return *this;
}

CoeffExpr& CoeffExpr::operator*=(const CoeffExpr& other) {
  *this = *this * other;
  return *this;
}

CoeffExpr operator*(const CoeffExpr& lhs, const CoeffExpr& rhs) {
  CoeffExpr out;
  for (const auto& [ma, va] : lhs.terms_) {
    for (const auto& [mb, vb] : rhs.terms_) {
      Monomial m = ma;
      for (const auto& [name, exp] : mb) m[name] += exp;
      out.add_term(m, va * vb);
    }
  }
  return out;
}

CoeffExpr operator-(const CoeffExpr& value) {
  CoeffExpr out;
  for (const auto& [mono, v] : value.terms_) out.terms_.emplace(mono, -v);
  return out;
}

// ------------------------------------------------------------------- P0Poly

P0Poly::P0Poly(std::vector<CoeffExpr> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

P0Poly::P0Poly(const CoeffExpr& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

P0Poly::P0Poly(long constant) : P0Poly(CoeffExpr(constant)) {}

P0Poly P0Poly::monomial(const CoeffExpr& c, unsigned power) {
  std::vector<CoeffExpr> v(power + 1);
  v[power] = c;
  return P0Poly(std::move(v));
}

P0Poly P0Poly::x() { return monomial(CoeffExpr(1), 1); }

void P0Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<unsigned> P0Poly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<unsigned>(coeffs_.size() - 1);
}

CoeffExpr P0Poly::coeff(unsigned power) const {
  return power < coeffs_.size() ? coeffs_[power] : CoeffExpr();
}

CoeffExpr P0Poly::leading() const { return coeffs_.empty() ? CoeffExpr() : coeffs_.back(); }

std::set<std::string> P0Poly::symbols() const {
  std::set<std::string> out;
  for (const auto& c : coeffs_) out.merge(c.symbols());
  return out;
}

P0Poly P0Poly::substitute_affine(const CoeffExpr& alpha, int sign) const {
  if (sign != 1 && sign != -1) throw Error("substitute_affine: sign must be +1 or -1");
  // Horner in the linear polynomial alpha + sign*P0.
  const P0Poly linear(std::vector<CoeffExpr>{alpha, CoeffExpr(sign)});
  P0Poly out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    out *= linear;
    out += P0Poly(*it);
  }
  return out;
}

P0Poly P0Poly::substitute_symbols(const std::map<std::string, CoeffExpr>& values) const {
  std::vector<CoeffExpr> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(c.substitute(values));
  return P0Poly(std::move(v));
}

P0Poly P0Poly::rename(const std::map<std::string, std::string>& names) const {
  std::vector<CoeffExpr> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(c.rename(names));
  return P0Poly(std::move(v));
}

CoeffExpr P0Poly::evaluate(const CoeffExpr& at) const {
  CoeffExpr out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) out = out * at + *it;
  return out;
}

P0Poly& P0Poly::operator+=(const P0Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

P0Poly& P0Poly::operator-=(const P0Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

P0Poly& P0Poly::operator*=(const P0Poly& other) {
  *this = *this * other;
  return *this;
}

P0Poly operator*(const P0Poly& lhs, const P0Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<CoeffExpr> v(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) v[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return P0Poly(std::move(v));
}

P0Poly operator-(const P0Poly& p) {
  std::vector<CoeffExpr> v;
  v.reserve(p.coeffs_.size());
  for (const auto& c : p.coeffs_) v.push_back(-c);
  return P0Poly(std::move(v));
}

P0Poly pp_arith(const P0Poly& p, const P0Poly& q, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return p + q;
    case ArithOp::sub:
      return p - q;
    case ArithOp::mul:
      return p * q;
  }
  throw Error("pp_arith: unknown operation");
}

}  // namespace polyalg
