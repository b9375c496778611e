#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "polyalg/algebra.hpp"
#include "polyalg/fusion.hpp"

namespace polyalg {

class RepError : public Error {
 public:
  using Error::Error;
};

class VerificationError : public Error {
 public:
  using Error::Error;
};

/// Basis indices on which truncated ladder relations hold exactly.
struct Mask {
  std::vector<bool> included;

  std::size_t size() const { return included.size(); }
  bool contains(std::size_t i) const { return included[i]; }
  std::size_t count() const;
  static Mask full(std::size_t dim) { return Mask{std::vector<bool>(dim, true)}; }
};

/// Finite matrix realization of a polynomial algebra.
///
/// P0 and every central element are diagonal in the stored basis, so both
/// are kept as diagonals. `edge[i]` counts the ladder steps from basis state
/// i to the truncation boundary (kExact for untruncated factors); states with
/// edge >= `buffer` form the exact interior.
struct Rep {
  static constexpr int kExact = std::numeric_limits<int>::max() / 4;

  std::size_t dim = 0;
  Eigen::VectorXd p0;
  Eigen::MatrixXd pplus;
  Eigen::MatrixXd pminus;
  std::map<std::string, Eigen::VectorXd> symbol_eval;
  std::string casimir_symbol;
  std::vector<int> edge;
  int buffer = 0;

  Mask exact_interior() const;
  bool truncated() const;
  Eigen::MatrixXd p0_matrix() const { return p0.asDiagonal(); }
};

/// Spin-j irrep; two_j = 2j must be a nonnegative integer.
Rep rep_su2(double j);
/// Positive discrete series D+(k) truncated to `cutoff` levels.
Rep rep_su11(double k, int cutoff);
/// Fock space truncated to `cutoff` levels.
Rep rep_boson(int cutoff);

inline constexpr std::size_t kDefaultMaxFusedDim = 20000;

/// Tensor-product realization of a fused algebra; symbol names come from `ledger`.
Rep rep_fused(const FusionLedger& ledger, const Rep& l, const Rep& m, double mu,
              std::size_t max_dim = kDefaultMaxFusedDim);
/// As above with default symbol names (Lambda, mu2, and the factors' Casimir symbols).
Rep rep_fused(FusionKind kind, const Rep& l, const Rep& m, double mu, std::size_t max_dim = kDefaultMaxFusedDim);

/// Diagonal of a coefficient-ring element under rep.symbol_eval.
Eigen::VectorXd evaluate_coefficient(const CoeffExpr& c, const Rep& rep);
/// Diagonal of f(P0) with central coefficients evaluated first.
Eigen::VectorXd evaluate_diagonal(const P0Poly& f, const Rep& rep);
/// Matrix of a normal-ordered envelope element.
Eigen::MatrixXd to_matrix(const EnvelopeElement& e, const Rep& rep);

/// Adds (or replaces) symbol values computed from coefficient-ring expressions.
Rep with_symbols(const Rep& rep, const std::map<std::string, CoeffExpr>& values);
/// Stores the evaluated Casimir of `alg` as rep.symbol_eval[alg.casimir_symbol()].
/// Throws RepError if the Casimir is not diagonal on the exact interior.
Rep attach_casimir(const Rep& rep, const PolyAlgebra& alg);

struct RelationResiduals {
  double raise = 0.0;       // [P0,P+] - P+
  double lower = 0.0;       // [P0,P-] + P-
  double commutator = 0.0;  // [P+,P-] - phi(P0)
  double max() const;
};

struct ResidualReport {
  std::string algebra;
  std::size_t dim = 0;
  std::size_t interior_states = 0;
  RelationResiduals interior;
  /// Same residuals over entries touching a state outside the interior.
  RelationResiduals boundary;
};

ResidualReport verify_relations(const Rep& rep, const PolyAlgebra& alg);

struct CasimirReport {
  std::string algebra;
  std::size_t dim = 0;
  std::size_t interior_states = 0;
  double with_plus = 0.0;
  double with_minus = 0.0;
  double with_zero = 0.0;
  Eigen::MatrixXd casimir;
  double max() const;
};

CasimirReport verify_casimir(const Rep& rep, const PolyAlgebra& alg);

/// Max over the interior of |[S,P0]|, |[S,P+]|, |[S,P-]| for a stored symbol.
double centrality_residual(const Rep& rep, const std::string& symbol);

/// Max interior entry of |A|.
double interior_max(const Eigen::MatrixXd& a, const Mask& mask);

}  // namespace polyalg
