#include "polyalg/matrixrep.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace polyalg {

std::size_t Mask::count() const { return static_cast<std::size_t>(std::count(included.begin(), included.end(), true)); }

Mask Rep::exact_interior() const {
  Mask mask;
  mask.included.resize(dim);
  for (std::size_t i = 0; i < dim; ++i) mask.included[i] = edge[i] >= buffer;
  return mask;
}

bool Rep::truncated() const {
  return std::any_of(edge.begin(), edge.end(), [](int e) { return e < kExact; });
}

double RelationResiduals::max() const { return std::max({raise, lower, commutator}); }

double CasimirReport::max() const { return std::max({with_plus, with_minus, with_zero}); }

namespace {

Eigen::VectorXd constant_vector(std::size_t dim, double value) {
  return Eigen::VectorXd::Constant(static_cast<Eigen::Index>(dim), value);
}

Rep ladder_rep(std::size_t dim) {
  Rep rep;
  rep.dim = dim;
  const auto n = static_cast<Eigen::Index>(dim);
  rep.p0 = Eigen::VectorXd::Zero(n);
  rep.pplus = Eigen::MatrixXd::Zero(n, n);
  rep.pminus = Eigen::MatrixXd::Zero(n, n);
  return rep;
}

// Truncated lowest-weight ladders: the top two levels feel the cutoff.
void mark_truncated(Rep& rep) {
  rep.edge.resize(rep.dim);
  for (std::size_t i = 0; i < rep.dim; ++i) rep.edge[i] = static_cast<int>(rep.dim - 1 - i);
  rep.buffer = 2;
}

}  // namespace

Rep rep_su2(double j) {
  const double twice = 2.0 * j;
  const double rounded = std::round(twice);
  if (!(j >= 0.0) || std::abs(twice - rounded) > 1e-9) {
    std::ostringstream os;
    os << "rep_su2: j = " << j << " is not a nonnegative half-integer";
    throw RepError(os.str());
  }
  const auto dim = static_cast<std::size_t>(rounded) + 1;
  const double jj = rounded / 2.0;
  Rep rep = ladder_rep(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const double m = jj - static_cast<double>(i);
    const auto ii = static_cast<Eigen::Index>(i);
    rep.p0(ii) = m;
    if (i > 0) rep.pplus(ii - 1, ii) = std::sqrt((jj - m) * (jj + m + 1.0));
  }
  rep.pminus = rep.pplus.transpose();
  rep.edge.assign(dim, Rep::kExact);
  rep.buffer = 0;
  rep.casimir_symbol = "C_J";
  rep.symbol_eval[rep.casimir_symbol] = constant_vector(dim, jj * (jj + 1.0));
  return rep;
}

Rep rep_su11(double k, int cutoff) {
  if (!(k > 0.0)) throw RepError("rep_su11: k must be positive");
  if (cutoff < 3) throw RepError("rep_su11: cutoff must be at least 3");
  const auto dim = static_cast<std::size_t>(cutoff);
  Rep rep = ladder_rep(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const auto n = static_cast<double>(i);
    const auto ii = static_cast<Eigen::Index>(i);
    rep.p0(ii) = k + n;
    if (i + 1 < dim) rep.pplus(ii + 1, ii) = std::sqrt((n + 1.0) * (2.0 * k + n));
  }
  rep.pminus = rep.pplus.transpose();
  mark_truncated(rep);
  rep.casimir_symbol = "C_K";
  rep.symbol_eval[rep.casimir_symbol] = constant_vector(dim, -k * (k - 1.0));
  return rep;
}

Rep rep_boson(int cutoff) {
  if (cutoff < 3) throw RepError("rep_boson: cutoff must be at least 3");
  const auto dim = static_cast<std::size_t>(cutoff);
  Rep rep = ladder_rep(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const auto ii = static_cast<Eigen::Index>(i);
    rep.p0(ii) = static_cast<double>(i);
    if (i + 1 < dim) rep.pplus(ii + 1, ii) = std::sqrt(static_cast<double>(i) + 1.0);
  }
  rep.pminus = rep.pplus.transpose();
  mark_truncated(rep);
  rep.casimir_symbol = "C_N";
  rep.symbol_eval[rep.casimir_symbol] = constant_vector(dim, 1.0);
  return rep;
}

namespace {

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Diagonal of A (x) 1 and 1 (x) B.
Eigen::VectorXd left_factor(const Eigen::VectorXd& a, Eigen::Index other) {
  Eigen::VectorXd out(a.size() * other);
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * other, other).setConstant(a(i));
  return out;
}

Eigen::VectorXd right_factor(const Eigen::VectorXd& b, Eigen::Index other) {
  Eigen::VectorXd out(b.size() * other);
  for (Eigen::Index i = 0; i < other; ++i) out.segment(i * b.size(), b.size()) = b;
  return out;
}

}  // namespace

Rep rep_fused(const FusionLedger& ledger, const Rep& l, const Rep& m, double mu, std::size_t max_dim) {
  if (l.dim == 0 || m.dim == 0) throw RepError("rep_fused: empty factor");
  if (l.dim > max_dim / m.dim) {
    std::ostringstream os;
    os << "rep_fused: dimension " << l.dim << " x " << m.dim << " exceeds limit " << max_dim;
    throw RepError(os.str());
  }
  const auto dl = static_cast<Eigen::Index>(l.dim);
  const auto dm = static_cast<Eigen::Index>(m.dim);

  Rep rep;
  rep.dim = l.dim * m.dim;
  const Eigen::VectorXd l0 = left_factor(l.p0, dm);
  const Eigen::VectorXd m0 = right_factor(m.p0, dl);
  Eigen::VectorXd lambda;
  if (ledger.kind == FusionKind::J) {
    rep.p0 = 0.5 * (l0 - m0);
    lambda = 0.5 * (l0 + m0);
    rep.pplus = mu * kron(l.pplus, m.pminus);
    rep.pminus = mu * kron(l.pminus, m.pplus);
  } else {
    rep.p0 = 0.5 * (l0 + m0);
    lambda = 0.5 * (l0 - m0);
    rep.pplus = mu * kron(l.pplus, m.pplus);
    rep.pminus = mu * kron(l.pminus, m.pminus);
  }

  for (const auto& [name, values] : l.symbol_eval) rep.symbol_eval[name] = left_factor(values, dm);
  for (const auto& [name, values] : m.symbol_eval) {
    auto it = ledger.m_renames.find(name);
    const std::string& target = it == ledger.m_renames.end() ? name : it->second;
    if (rep.symbol_eval.count(target) == 0) rep.symbol_eval[target] = right_factor(values, dl);
  }
  if (auto it = l.symbol_eval.find(l.casimir_symbol); it != l.symbol_eval.end())
    rep.symbol_eval[ledger.casimir_l] = left_factor(it->second, dm);
  if (auto it = m.symbol_eval.find(m.casimir_symbol); it != m.symbol_eval.end())
    rep.symbol_eval[ledger.casimir_m] = right_factor(it->second, dl);
  rep.symbol_eval[ledger.lambda] = lambda;
  rep.symbol_eval[ledger.mu2] = constant_vector(rep.dim, mu * mu);

  rep.edge.resize(rep.dim);
  for (std::size_t i = 0; i < l.dim; ++i)
    for (std::size_t j = 0; j < m.dim; ++j) rep.edge[i * m.dim + j] = std::min(l.edge[i], m.edge[j]);
  rep.buffer = rep.truncated() ? std::max(l.buffer, m.buffer) + 2 : 0;
  return rep;
}

Rep rep_fused(FusionKind kind, const Rep& l, const Rep& m, double mu, std::size_t max_dim) {
  FusionLedger ledger;
  ledger.kind = kind;
  ledger.casimir_l = l.casimir_symbol;
  ledger.casimir_m = m.casimir_symbol == l.casimir_symbol ? m.casimir_symbol + "_2" : m.casimir_symbol;
  return rep_fused(ledger, l, m, mu, max_dim);
}

Eigen::VectorXd evaluate_coefficient(const CoeffExpr& c, const Rep& rep) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(rep.dim));
  for (const auto& [mono, value] : c.terms()) {
    Eigen::VectorXd term = constant_vector(rep.dim, value.get_d());
    for (const auto& [name, exp] : mono) {
      auto it = rep.symbol_eval.find(name);
      if (it == rep.symbol_eval.end()) throw VerificationError("no value for central symbol '" + name + "'");
      term = term.cwiseProduct(it->second.array().pow(static_cast<double>(exp)).matrix());
    }
    out += term;
  }
  return out;
}

Eigen::VectorXd evaluate_diagonal(const P0Poly& f, const Rep& rep) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(rep.dim));
  const auto& coeffs = f.coeffs();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    out = out.cwiseProduct(rep.p0) + evaluate_coefficient(*it, rep);
  return out;
}

Eigen::MatrixXd to_matrix(const EnvelopeElement& e, const Rep& rep) {
  const auto n = static_cast<Eigen::Index>(rep.dim);
  std::vector<Eigen::MatrixXd> raise{Eigen::MatrixXd::Identity(n, n)};
  std::vector<Eigen::MatrixXd> lower{Eigen::MatrixXd::Identity(n, n)};
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [key, f] : e.monomials()) {
    const auto [a, b] = key;
    while (raise.size() <= a) raise.push_back(raise.back() * rep.pplus);
    while (lower.size() <= b) lower.push_back(lower.back() * rep.pminus);
    out += raise[a] * evaluate_diagonal(f, rep).asDiagonal() * lower[b];
  }
  return out;
}

Rep with_symbols(const Rep& rep, const std::map<std::string, CoeffExpr>& values) {
  Rep out = rep;
  for (const auto& [name, value] : values) out.symbol_eval[name] = evaluate_coefficient(value, rep);
  return out;
}

double interior_max(const Eigen::MatrixXd& a, const Mask& mask) {
  double best = 0.0;
  for (Eigen::Index c = 0; c < a.cols(); ++c) {
    if (!mask.contains(static_cast<std::size_t>(c))) continue;
    for (Eigen::Index r = 0; r < a.rows(); ++r)
      if (mask.contains(static_cast<std::size_t>(r))) best = std::max(best, std::abs(a(r, c)));
  }
  return best;
}

namespace {

double boundary_max(const Eigen::MatrixXd& a, const Mask& mask) {
  double best = 0.0;
  for (Eigen::Index c = 0; c < a.cols(); ++c) {
    const bool col_in = mask.contains(static_cast<std::size_t>(c));
    for (Eigen::Index r = 0; r < a.rows(); ++r)
      if (!col_in || !mask.contains(static_cast<std::size_t>(r))) best = std::max(best, std::abs(a(r, c)));
  }
  return best;
}

void require_symbols(const Rep& rep, const PolyAlgebra& alg) {
  std::vector<std::string> missing;
  for (const auto& name : alg.centrals())
    if (rep.symbol_eval.count(name) == 0) missing.push_back(name);
  if (missing.empty()) return;
  std::string list;
  for (const auto& name : missing) list += (list.empty() ? "" : ", ") + name;
  throw VerificationError("algebra '" + alg.name() + "' has unassigned central symbols: " + list);
}

// [diag(d), A] has entries (d_r - d_c) A_rc.
Eigen::MatrixXd diagonal_commutator(const Eigen::VectorXd& d, const Eigen::MatrixXd& a) {
  Eigen::MatrixXd out = a;
  for (Eigen::Index c = 0; c < a.cols(); ++c)
    for (Eigen::Index r = 0; r < a.rows(); ++r) out(r, c) = (d(r) - d(c)) * a(r, c);
  return out;
}

}  // namespace

Rep attach_casimir(const Rep& rep, const PolyAlgebra& alg) {
  require_symbols(rep, alg);
  const Eigen::MatrixXd c = to_matrix(casimir(alg), rep);
  const Mask mask = rep.exact_interior();
  Eigen::MatrixXd off = c;
  off.diagonal().setZero();
  const double scale = 1.0 + interior_max(c, mask);
  if (interior_max(off, mask) > 1e-9 * scale)
    throw RepError("Casimir of '" + alg.name() + "' is not diagonal in this realization");
  Rep out = rep;
  out.casimir_symbol = alg.casimir_symbol();
  out.symbol_eval[out.casimir_symbol] = c.diagonal();
  return out;
}

ResidualReport verify_relations(const Rep& rep, const PolyAlgebra& alg) {
  require_symbols(rep, alg);
  const Mask mask = rep.exact_interior();
  const Eigen::VectorXd phi = evaluate_diagonal(alg.phi(), rep);

  const Eigen::MatrixXd raise = diagonal_commutator(rep.p0, rep.pplus) - rep.pplus;
  const Eigen::MatrixXd lower = diagonal_commutator(rep.p0, rep.pminus) + rep.pminus;
  Eigen::MatrixXd comm = rep.pplus * rep.pminus - rep.pminus * rep.pplus;
  comm.diagonal() -= phi;

  ResidualReport report;
  report.algebra = alg.name();
  report.dim = rep.dim;
  report.interior_states = mask.count();
  report.interior = {interior_max(raise, mask), interior_max(lower, mask), interior_max(comm, mask)};
  report.boundary = {boundary_max(raise, mask), boundary_max(lower, mask), boundary_max(comm, mask)};
  return report;
}

CasimirReport verify_casimir(const Rep& rep, const PolyAlgebra& alg) {
  require_symbols(rep, alg);
  const Mask mask = rep.exact_interior();
  CasimirReport report;
  report.algebra = alg.name();
  report.dim = rep.dim;
  report.interior_states = mask.count();
  report.casimir = to_matrix(casimir(alg), rep);
  const Eigen::MatrixXd& c = report.casimir;
  report.with_plus = interior_max(c * rep.pplus - rep.pplus * c, mask);
  report.with_minus = interior_max(c * rep.pminus - rep.pminus * c, mask);
  report.with_zero = interior_max(-diagonal_commutator(rep.p0, c), mask);
  return report;
}

double centrality_residual(const Rep& rep, const std::string& symbol) {
  auto it = rep.symbol_eval.find(symbol);
  if (it == rep.symbol_eval.end()) throw VerificationError("no value for central symbol '" + symbol + "'");
  const Mask mask = rep.exact_interior();
  // [S, P0] vanishes identically: both are diagonal.
  return std::max(interior_max(diagonal_commutator(it->second, rep.pplus), mask),
                  interior_max(diagonal_commutator(it->second, rep.pminus), mask));
}

}  // namespace polyalg
