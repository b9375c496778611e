#include "polyalg/algebra.hpp"

namespace polyalg {

EnvelopeElement::EnvelopeElement(const P0Poly& middle) { add({0, 0}, middle); }

EnvelopeElement EnvelopeElement::monomial(unsigned raise, const P0Poly& middle, unsigned lower) {
  EnvelopeElement e;
  e.add({raise, lower}, middle);
  return e;
}

P0Poly EnvelopeElement::coefficient(unsigned raise, unsigned lower) const {
  auto it = monomials_.find({raise, lower});
  return it == monomials_.end() ? P0Poly() : it->second;
}

void EnvelopeElement::add(const Key& key, const P0Poly& middle) {
  if (middle.is_zero()) return;
  auto [it, inserted] = monomials_.emplace(key, middle);
  if (inserted) return;
  it->second += middle;
  if (it->second.is_zero()) monomials_.erase(it);
}

EnvelopeElement& EnvelopeElement::operator+=(const EnvelopeElement& other) {
  for (const auto& [key, f] : other.monomials_) add(key, f);
  return *this;
}

EnvelopeElement& EnvelopeElement::operator-=(const EnvelopeElement& other) {
  for (const auto& [key, f] : other.monomials_) add(key, -f);
  return *this;
}

EnvelopeElement operator-(const EnvelopeElement& a) {
  EnvelopeElement out;
  for (const auto& [key, f] : a.monomials_) out.add(key, -f);
  return out;
}

namespace {

// Rewriting rules, all directed consequences of the defining relations:
//   P0 P+ -> P+ (P0 + 1),  P- P0 -> (P0 + 1) P-,  P- P+ -> P+ P- - phi(P0).
// Iterating the last rule through a block of raising operators gives
//   P- P+^c = P+^c P- - P+^(c-1) sum_{k<c} phi(P0 + k).
class Rewriter {
 public:
  explicit Rewriter(const PolyAlgebra& alg) : phi_(alg.phi()) {}

  EnvelopeElement lower_times(const EnvelopeElement& y) {
    EnvelopeElement out;
    for (const auto& [key, h] : y.monomials()) {
      const auto [c, d] = key;
      out += EnvelopeElement::monomial(c, h.shifted(CoeffExpr(1)), d + 1);
      if (c > 0) out -= EnvelopeElement::monomial(c - 1, ladder_sum(c) * h, d);
    }
    return out;
  }

  static EnvelopeElement middle_times(const P0Poly& f, const EnvelopeElement& y) {
    EnvelopeElement out;
    for (const auto& [key, h] : y.monomials()) {
      const auto [c, d] = key;
      out += EnvelopeElement::monomial(c, f.shifted(CoeffExpr(static_cast<long>(c))) * h, d);
    }
    return out;
  }

  static EnvelopeElement raise_times(unsigned a, const EnvelopeElement& y) {
    EnvelopeElement out;
    for (const auto& [key, h] : y.monomials()) out += EnvelopeElement::monomial(key.first + a, h, key.second);
    return out;
  }

 private:
  const P0Poly& ladder_sum(unsigned c) {
    while (sums_.size() < c) {
      const auto k = static_cast<long>(sums_.size());
      P0Poly prev = sums_.empty() ? P0Poly() : sums_.back();
      sums_.push_back(prev + phi_.shifted(CoeffExpr(k)));
    }
    return sums_[c - 1];
  }

  P0Poly phi_;
  std::vector<P0Poly> sums_;
};

}  // namespace

EnvelopeElement env_mul(const EnvelopeElement& x, const EnvelopeElement& y, const PolyAlgebra& alg) {
  Rewriter rw(alg);
  EnvelopeElement out;
  for (const auto& [key, f] : x.monomials()) {
    const auto [a, b] = key;
    EnvelopeElement t = y;
    for (unsigned i = 0; i < b; ++i) t = rw.lower_times(t);
    t = Rewriter::middle_times(f, t);
    out += Rewriter::raise_times(a, t);
  }
  return out;
}

EnvelopeElement env_commutator(const EnvelopeElement& x, const EnvelopeElement& y, const PolyAlgebra& alg) {
  return env_mul(x, y, alg) - env_mul(y, x, alg);
}

}  // namespace polyalg
