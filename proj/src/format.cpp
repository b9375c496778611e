#include "polyalg/format.hpp"

#include <set>
#include <sstream>
#include <vector>

namespace polyalg {

namespace {

struct SignedTerm {
  bool negative = false;
  std::string body;
};

std::string join_terms(const std::vector<SignedTerm>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i == 0)
      out += terms[i].negative ? "-" : "";
    else
      out += terms[i].negative ? " - " : " + ";
    out += terms[i].body;
  }
  return out;
}

std::string text_rational(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::vector<SignedTerm> text_terms(const CoeffExpr& c, unsigned p0_power) {
  std::vector<SignedTerm> out;
  for (const auto& [mono, value] : c.terms()) {
    std::vector<std::string> factors;
    for (const auto& [name, exp] : mono) factors.push_back(exp == 1 ? name : name + "^" + std::to_string(exp));
    if (p0_power == 1) factors.emplace_back("P0");
    if (p0_power > 1) factors.push_back("P0^" + std::to_string(p0_power));
    const Rational mag = abs(value);
    std::string body;
    if (factors.empty() || mag != 1) body = text_rational(mag);
    for (const auto& f : factors) body += (body.empty() ? "" : "*") + f;
    out.push_back({value < 0, body});
  }
  return out;
}

}  // namespace

std::string to_text(const CoeffExpr& c) { return join_terms(text_terms(c, 0)); }

std::string to_text(const P0Poly& p) {
  std::vector<SignedTerm> all;
  const auto& coeffs = p.coeffs();
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    auto terms = text_terms(coeffs[k], static_cast<unsigned>(k));
    all.insert(all.end(), terms.begin(), terms.end());
  }
  return join_terms(all);
}

std::string to_text(const EnvelopeElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (auto it = e.monomials().rbegin(); it != e.monomials().rend(); ++it) {
    const auto [a, b] = it->first;
    std::vector<std::string> parts;
    if (a > 0) parts.push_back(a == 1 ? "P+" : "P+^" + std::to_string(a));
    const bool bare = a == 0 && b == 0;
    if (!(it->second == P0Poly(1)) || bare) parts.push_back(bare ? to_text(it->second) : "(" + to_text(it->second) + ")");
    if (b > 0) parts.push_back(b == 1 ? "P-" : "P-^" + std::to_string(b));
    std::string mono;
    for (const auto& p : parts) mono += (mono.empty() ? "" : "*") + p;
    if (out.empty()) out = mono;
    else if (mono.front() == '-') out += " - " + mono.substr(1);
    else out += " + " + mono;
  }
  return out;
}

// ------------------------------------------------------------------ LaTeX

std::string latex_symbol(const std::string& name) {
  static const std::set<std::string> greek{"alpha", "beta",  "gamma", "delta", "epsilon", "lambda",
                                           "mu",    "nu",    "sigma", "omega", "Lambda",  "Gamma",
                                           "Delta", "Omega", "Sigma", "Phi",   "phi",     "theta"};
  if (name == "mu2") return "\\mu^{2}";
  if (name == "habs") return "|h|";
  auto render_head = [&](const std::string& head) { return greek.count(head) ? "\\" + head : head; };
  auto underscore = name.find('_');
  if (underscore == std::string::npos || underscore + 1 == name.size()) return render_head(name);
  return render_head(name.substr(0, underscore)) + "_{" + name.substr(underscore + 1) + "}";
}

namespace {

std::string latex_rational(const Rational& mag) {
  if (mag.get_den() == 1) return mag.get_num().get_str();
  return "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
}

std::string latex_monomial(const Monomial& mono) {
  std::string out;
  for (const auto& [name, exp] : mono) {
    if (!out.empty()) out += " ";
    out += latex_symbol(name);
    if (exp > 1) out += "^{" + std::to_string(exp) + "}";
  }
  return out;
}

std::string latex_p0(unsigned k) {
  if (k == 0) return "";
  if (k == 1) return "P_0";
  return "P_0^{" + std::to_string(k) + "}";
}

std::vector<SignedTerm> latex_terms(const CoeffExpr& c, const std::string& suffix) {
  std::vector<SignedTerm> out;
  for (const auto& [mono, value] : c.terms()) {
    std::vector<std::string> parts;
    const Rational mag = abs(value);
    const std::string m = latex_monomial(mono);
    if ((m.empty() && suffix.empty()) || mag != 1) parts.push_back(latex_rational(mag));
    if (!m.empty()) parts.push_back(m);
    if (!suffix.empty()) parts.push_back(suffix);
    std::string body;
    for (const auto& p : parts) body += (body.empty() ? "" : " ") + p;
    out.push_back({value < 0, body});
  }
  return out;
}

}  // namespace

std::string to_latex(const CoeffExpr& c) { return join_terms(latex_terms(c, "")); }

std::string to_latex(const P0Poly& p) {
  std::vector<SignedTerm> all;
  const auto& coeffs = p.coeffs();
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const CoeffExpr& c = coeffs[k];
    if (c.is_zero()) continue;
    const auto power = static_cast<unsigned>(k);
    if (c.terms().size() == 1 || power == 0) {
      auto terms = latex_terms(c, latex_p0(power));
      all.insert(all.end(), terms.begin(), terms.end());
    } else {
      all.push_back({false, "\\left(" + to_latex(c) + "\\right) " + latex_p0(power)});
    }
  }
  return join_terms(all);
}

std::string to_latex(const EnvelopeElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (auto it = e.monomials().rbegin(); it != e.monomials().rend(); ++it) {
    const auto [a, b] = it->first;
    std::string mono;
    if (a > 0) mono += a == 1 ? "P_+" : "P_+^{" + std::to_string(a) + "}";
    const bool bare = a == 0 && b == 0;
    if (!(it->second == P0Poly(1)) || bare)
      mono += bare ? to_latex(it->second) : "\\left(" + to_latex(it->second) + "\\right)";
    if (b > 0) mono += b == 1 ? "P_-" : "P_-^{" + std::to_string(b) + "}";
    if (out.empty()) out = mono;
    else if (mono.front() == '-') out += " - " + mono.substr(1);
    else out += " + " + mono;
  }
  return out;
}

// ------------------------------------------------------------------- JSON

nlohmann::json to_json(const CoeffExpr& c) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [mono, value] : c.terms()) {
    nlohmann::json symbols = nlohmann::json::object();
    for (const auto& [name, exp] : mono) symbols[name] = exp;
    out.push_back({{"symbols", symbols}, {"rational", rational_string(value)}});
  }
  return out;
}

nlohmann::json to_json(const P0Poly& p) {
  nlohmann::json terms = nlohmann::json::array();
  const auto& coeffs = p.coeffs();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    terms.push_back({{"p0_power", k}, {"coeff", to_json(coeffs[k])}});
  }
  return {{"terms", terms}};
}

CoeffExpr coeff_from_json(const nlohmann::json& j) {
  std::vector<std::pair<Monomial, Rational>> raw;
  for (const auto& term : j) {
    Monomial mono;
    for (const auto& [name, exp] : term.at("symbols").items()) mono[name] = exp.get<unsigned>();
    raw.emplace_back(std::move(mono), parse_rational(term.at("rational").get<std::string>()));
  }
  return CoeffExpr::normalize(raw);
}

P0Poly poly_from_json(const nlohmann::json& j) {
  P0Poly out;
  for (const auto& term : j.at("terms"))
    out += P0Poly::monomial(coeff_from_json(term.at("coeff")), term.at("p0_power").get<unsigned>());
  return out;
}

nlohmann::json to_json(const RelationResiduals& r) {
  return {{"p0_raise", r.raise}, {"p0_lower", r.lower}, {"commutator", r.commutator}};
}

nlohmann::json to_json(const ResidualReport& r) {
  return {{"algebra", r.algebra},
          {"dim", r.dim},
          {"interior_states", r.interior_states},
          {"interior", to_json(r.interior)},
          {"boundary", to_json(r.boundary)}};
}

}  // namespace polyalg
