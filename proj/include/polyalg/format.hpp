#pragma once

#include <string>

#include <json.hpp>

#include "polyalg/algebra.hpp"
#include "polyalg/coeffring.hpp"
#include "polyalg/matrixrep.hpp"

namespace polyalg {

// Plain text uses the DSL's polynomial syntax, so printed polynomials parse back.
std::string to_text(const CoeffExpr& c);
std::string to_text(const P0Poly& p);
std::string to_text(const EnvelopeElement& e);

// LaTeX: descending powers of P0, coefficients in lexicographic symbol order.
std::string latex_symbol(const std::string& name);
std::string to_latex(const CoeffExpr& c);
std::string to_latex(const P0Poly& p);
std::string to_latex(const EnvelopeElement& e);

// {"terms": [{"p0_power": k, "coeff": [{"symbols": {...}, "rational": "p/q"}]}]}
nlohmann::json to_json(const CoeffExpr& c);
nlohmann::json to_json(const P0Poly& p);
CoeffExpr coeff_from_json(const nlohmann::json& j);
P0Poly poly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RelationResiduals& r);
nlohmann::json to_json(const ResidualReport& r);

}  // namespace polyalg
