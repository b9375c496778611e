#include "polyalg/fusion.hpp"

#include <set>

namespace polyalg {

std::string to_string(FusionKind kind) { return kind == FusionKind::J ? "J" : "K"; }

FusionKind parse_fusion_kind(const std::string& text) {
  if (text == "J") return FusionKind::J;
  if (text == "K") return FusionKind::K;
  throw FusionError("unknown fusion kind '" + text + "' (expected J or K)");
}

namespace {

constexpr int kMaxRenameAttempts = 99;

std::string fresh_name(const std::string& base, const std::set<std::string>& taken) {
  if (taken.count(base) == 0) return base;
  for (int i = 2; i <= kMaxRenameAttempts; ++i) {
    std::string candidate = base + "_" + std::to_string(i);
    if (taken.count(candidate) == 0) return candidate;
  }
  throw FusionError("cannot find a fresh name for symbol '" + base + "'");
}

}  // namespace

FusedAlgebra fuse(FusionKind kind, const PolyAlgebra& l, const PolyAlgebra& m, const FuseOptions& options) {
  FusionLedger ledger;
  ledger.kind = kind;
  ledger.l_name = l.name();
  ledger.m_name = m.name();

  std::set<std::string> taken = l.centrals();
  ledger.casimir_l = fresh_name(options.casimir_l.empty() ? l.casimir_symbol() : options.casimir_l, taken);
  taken.insert(ledger.casimir_l);

  for (const auto& name : m.centrals()) {
    if (taken.count(name) == 0) continue;
    // Collisions are resolved against everything M already uses as well.
    std::set<std::string> avoid = taken;
    avoid.insert(m.centrals().begin(), m.centrals().end());
    for (const auto& [from, to] : ledger.m_renames) avoid.insert(to);
    ledger.m_renames[name] = fresh_name(name, avoid);
  }
  for (const auto& name : m.centrals()) {
    auto it = ledger.m_renames.find(name);
    taken.insert(it == ledger.m_renames.end() ? name : it->second);
  }
  ledger.casimir_m = fresh_name(options.casimir_m.empty() ? m.casimir_symbol() : options.casimir_m, taken);
  taken.insert(ledger.casimir_m);
  ledger.lambda = fresh_name(options.lambda, taken);
  taken.insert(ledger.lambda);
  ledger.mu2 = fresh_name(options.mu2, taken);
  taken.insert(ledger.mu2);

  ledger.casimir_l_value = l.casimir_value();
  if (m.casimir_value()) ledger.casimir_m_value = m.casimir_value()->rename(ledger.m_renames);
  ledger.mu2_value = options.mu2_value;

  const CoeffExpr cas_l = ledger.casimir_l_value ? *ledger.casimir_l_value : CoeffExpr::symbol(ledger.casimir_l);
  const CoeffExpr cas_m = ledger.casimir_m_value ? *ledger.casimir_m_value : CoeffExpr::symbol(ledger.casimir_m);
  const CoeffExpr mu2 = ledger.mu2_value ? *ledger.mu2_value : CoeffExpr::symbol(ledger.mu2);
  const CoeffExpr lambda = CoeffExpr::symbol(ledger.lambda);
  const CoeffExpr one(1);

  const P0Poly& phi_l = l.phi();
  const P0Poly phi_m = m.phi().rename(ledger.m_renames);
  const P0Poly g_l = solve_g(phi_l);
  const P0Poly g_m = solve_g(phi_m);

  P0Poly phi;
  if (kind == FusionKind::J) {
    P0Poly first = (P0Poly(cas_m) - g_m.substitute_affine(lambda - one, -1)) * phi_l.substitute_affine(lambda, +1);
    P0Poly second = (P0Poly(cas_l) - g_l.substitute_affine(lambda - one, +1)) * phi_m.substitute_affine(lambda, -1);
    phi = P0Poly(mu2) * (first - second);
  } else {
    P0Poly first = (P0Poly(cas_l) - g_l.substitute_affine(lambda - one, +1)) * phi_m.substitute_affine(-lambda, +1);
    P0Poly second = (P0Poly(cas_m) - g_m.substitute_affine(-lambda, +1)) * phi_l.substitute_affine(lambda, +1);
    phi = P0Poly(mu2) * (first + second);
  }

  std::string name = options.name;
  std::string casimir_symbol;
  if (name.empty()) {
    name = to_string(kind) + "(" + l.name() + "," + m.name() + ")";
    casimir_symbol = "C_" + to_string(kind) + "_" + l.name() + "_" + m.name();
  }
  return FusedAlgebra{PolyAlgebra(name, std::move(phi), casimir_symbol), std::move(ledger)};
}

PolyAlgebra specialize(const PolyAlgebra& alg, const std::map<std::string, CoeffExpr>& assignments) {
  for (const auto& [name, value] : assignments) {
    for (const auto& used : value.symbols()) {
      if (assignments.count(used) != 0)
        throw SpecializationError("cyclic assignment: value for '" + name + "' mentions assigned symbol '" + used +
                                  "'");
    }
  }
  std::optional<CoeffExpr> value;
  if (alg.casimir_value()) value = alg.casimir_value()->substitute(assignments);
  return PolyAlgebra(alg.name(), alg.phi().substitute_symbols(assignments), alg.casimir_symbol(), std::move(value));
}

PolyAlgebra specialize(const FusedAlgebra& fused, const std::map<std::string, CoeffExpr>& assignments) {
  return specialize(fused.algebra, assignments);
}

bool fused_order_check(const FusedAlgebra& fused, unsigned l, unsigned m) {
  const auto deg = fused.algebra.order();
  return deg && *deg == l + m + 1;
}

}  // namespace polyalg
