#pragma once

#include <random>

#include "polyalg/algebra.hpp"

namespace polyalg {

/// Generators for property checks. Deterministic for a given engine state.
class RandomAlgebras {
 public:
  explicit RandomAlgebras(unsigned long seed) : rng_(seed) {}

  /// num in [-9, 9], den in [1, 6]; never zero when `nonzero`.
  Rational rational(bool nonzero = false);
  /// A rational, optionally plus a term in one of the symbols a, b, c (up to square).
  CoeffExpr coeff(bool symbolic, bool nonzero = false);
  /// Exact degree `degree` with a nonzero leading coefficient.
  P0Poly poly(unsigned degree, bool symbolic);
  PolyAlgebra algebra(const std::string& name, unsigned degree, bool symbolic);
  unsigned uniform(unsigned lo, unsigned hi);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace polyalg
