#include "polyalg/random.hpp"

namespace polyalg {

unsigned RandomAlgebras::uniform(unsigned lo, unsigned hi) {
  return std::uniform_int_distribution<unsigned>(lo, hi)(rng_);
}

Rational RandomAlgebras::rational(bool nonzero) {
  long num = 0;
  do {
    num = std::uniform_int_distribution<long>(-9, 9)(rng_);
  } while (nonzero && num == 0);
  return make_rational(num, std::uniform_int_distribution<long>(1, 6)(rng_));
}

CoeffExpr RandomAlgebras::coeff(bool symbolic, bool nonzero) {
  static const char* const kSymbols[] = {"a", "b", "c"};
  CoeffExpr out;
  do {
    out = CoeffExpr(rational());
    if (symbolic && uniform(0, 1) == 1) {
      const std::string name = kSymbols[uniform(0, 2)];
      out += CoeffExpr(rational(true)) * CoeffExpr::symbol(name, uniform(1, 2));
    }
  } while (nonzero && out.is_zero());
  return out;
}

P0Poly RandomAlgebras::poly(unsigned degree, bool symbolic) {
  std::vector<CoeffExpr> coeffs(degree + 1);
  for (unsigned i = 0; i < degree; ++i) coeffs[i] = coeff(symbolic);
  coeffs[degree] = coeff(symbolic, true);
  return P0Poly(std::move(coeffs));
}

PolyAlgebra RandomAlgebras::algebra(const std::string& name, unsigned degree, bool symbolic) {
  return PolyAlgebra(name, poly(degree, symbolic));
}

}  // namespace polyalg
