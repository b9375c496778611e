#pragma once

#include <map>
#include <optional>
#include <string>

#include "polyalg/algebra.hpp"

namespace polyalg {

class FusionError : public Error {
 public:
  using Error::Error;
};

class SpecializationError : public Error {
 public:
  using Error::Error;
};

/// J: P0 = (L0 - M0)/2, P+ = mu L+ M-, P- = mu L- M+, Lambda = (L0 + M0)/2.
/// K: P0 = (L0 + M0)/2, P+ = mu L+ M+, P- = mu L- M-, Lambda = (L0 - M0)/2.
enum class FusionKind { J, K };

std::string to_string(FusionKind kind);
FusionKind parse_fusion_kind(const std::string& text);

/// Which central symbols a fusion introduced, and how M's symbols were renamed.
struct FusionLedger {
  FusionKind kind = FusionKind::J;
  std::string lambda = "Lambda";
  std::string mu2 = "mu2";
  std::string casimir_l;
  std::string casimir_m;
  /// Pinned Casimir values substituted instead of casimir_l / casimir_m.
  std::optional<CoeffExpr> casimir_l_value;
  std::optional<CoeffExpr> casimir_m_value;
  /// Fixed value substituted for mu^2 (the symbol is then absent).
  std::optional<CoeffExpr> mu2_value;
  /// Symbols of M renamed to avoid aliasing L's.
  std::map<std::string, std::string> m_renames;
  std::string l_name;
  std::string m_name;
};

struct FusedAlgebra {
  PolyAlgebra algebra;
  FusionLedger ledger;
};

struct FuseOptions {
  /// Name of the result; defaults to "J(L,M)" / "K(L,M)".
  std::string name;
  std::string lambda = "Lambda";
  std::string mu2 = "mu2";
  /// Casimir symbol names; default to the inputs' own casimir symbols.
  std::string casimir_l;
  std::string casimir_m;
  /// When set, mu^2 is this value rather than a free symbol.
  std::optional<CoeffExpr> mu2_value;
};

/// Generalized Jordan-Schwinger fusion of two mutually commuting algebras.
///
/// J: phi = mu2 {[C_M - g_M(Lambda - P0 - 1)] phi_L(Lambda + P0)
///             - [C_L - g_L(Lambda + P0 - 1)] phi_M(Lambda - P0)}
/// K: phi = mu2 {[C_L - g_L(P0 + Lambda - 1)] phi_M(P0 - Lambda)
///             + [C_M - g_M(P0 - Lambda)] phi_L(P0 + Lambda)}
FusedAlgebra fuse(FusionKind kind, const PolyAlgebra& l, const PolyAlgebra& m, const FuseOptions& options = {});

/// Substitutes central symbols in phi (and in a pinned Casimir value).
PolyAlgebra specialize(const PolyAlgebra& alg, const std::map<std::string, CoeffExpr>& assignments);
PolyAlgebra specialize(const FusedAlgebra& fused, const std::map<std::string, CoeffExpr>& assignments);

bool fused_order_check(const FusedAlgebra& fused, unsigned l, unsigned m);

}  // namespace polyalg
