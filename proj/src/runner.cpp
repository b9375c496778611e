#include "polyalg/runner.hpp"

#include <cstdio>
#include <sstream>

#include "polyalg/format.hpp"

namespace polyalg {

using nlohmann::json;

OutputMode parse_output_mode(const std::string& text) {
  if (text == "text") return OutputMode::text;
  if (text == "json") return OutputMode::json;
  if (text == "latex") return OutputMode::latex;
  throw Error("unknown output format '" + text + "' (expected text, json or latex)");
}

ExecutionError::ExecutionError(const std::string& message, dsl::Location where)
    : Error(std::to_string(where.line) + ":" + std::to_string(where.column) + ": " + message), where_(where) {}

namespace {

constexpr double kExactThreshold = 1e-13;
constexpr double kTruncatedThreshold = 1e-10;
constexpr double kFusedThreshold = 1e-9;
constexpr double kCentralityThreshold = 1e-12;

double number_value(const std::string& text) {
  if (text.find('/') != std::string::npos) return parse_rational(text).get_d();
  try {
    std::size_t used = 0;
    double v = std::stod(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error("malformed number '" + text + "'");
}

double lookup(const RepParams& params, const std::string& path, const std::string& key, double fallback) {
  if (auto it = params.find(path + key); it != params.end()) return number_value(it->second);
  if (auto it = params.find(key); it != params.end()) return number_value(it->second);
  return fallback;
}

int lookup_int(const RepParams& params, const std::string& path, const std::string& key, int fallback) {
  const double v = lookup(params, path, key, fallback);
  if (v != static_cast<double>(static_cast<int>(v))) throw Error("parameter '" + key + "' must be an integer");
  return static_cast<int>(v);
}

Rep realize_at(const std::map<std::string, Entry>& env, const std::string& name, const RepParams& params,
               const std::string& path) {
  auto it = env.find(name);
  if (it == env.end()) throw RepError("unknown algebra '" + name + "'");
  const Entry& entry = it->second;

  if (entry.fusion) {
    const FusionLedger& ledger = *entry.fusion;
    Rep l = realize_at(env, ledger.l_name, params, path + "l.");
    Rep m = realize_at(env, ledger.m_name, params, path + "m.");
    Rep rep = rep_fused(ledger, l, m, lookup(params, path, "mu", 1.0));
    try {
      rep = attach_casimir(rep, entry.algebra);
    } catch (const RepError&) {
      // Left without a Casimir value; only matters if this algebra is fused again.
    }
    return rep;
  }

  const P0Poly& phi = entry.algebra.phi();
  Rep rep;
  if (phi == P0Poly(-1)) {
    rep = rep_boson(lookup_int(params, path, "cutoff", 12));
  } else if (phi == P0Poly::monomial(CoeffExpr(2), 1)) {
    rep = rep_su2(lookup(params, path, "j", 1.0));
  } else if (phi == P0Poly::monomial(CoeffExpr(-2), 1)) {
    rep = rep_su11(lookup(params, path, "k", 1.0), lookup_int(params, path, "cutoff", 12));
  } else {
    throw RepError("no matrix realization known for algebra '" + name + "'");
  }
  const std::string& symbol = entry.algebra.casimir_symbol();
  if (symbol != rep.casimir_symbol) {
    rep.symbol_eval[symbol] = rep.symbol_eval.at(rep.casimir_symbol);
    rep.casimir_symbol = symbol;
  }
  return rep;
}

}  // namespace

Rep realize(const std::map<std::string, Entry>& env, const std::string& name, const RepParams& params) {
  return realize_at(env, name, params, "");
}

VerifyOutcome verify_entry(const std::map<std::string, Entry>& env, const std::string& name, const RepParams& params) {
  const Entry& entry = env.at(name);
  const Rep rep = realize(env, name, params);
  VerifyOutcome out;
  out.relations = verify_relations(rep, entry.algebra);
  out.casimir = verify_casimir(rep, entry.algebra);
  if (entry.fusion) out.lambda_centrality = centrality_residual(rep, entry.fusion->lambda);

  double fallback = kTruncatedThreshold;
  if (entry.fusion)
    fallback = kFusedThreshold;
  else if (!rep.truncated())
    fallback = kExactThreshold;
  out.threshold = lookup(params, "", "tol", fallback);

  // Casimir commutators scale with |C| |P+|.
  const Mask mask = rep.exact_interior();
  const double scale = std::max(1.0, interior_max(out.casimir.casimir, mask)) *
                       std::max(1.0, interior_max(rep.pplus, mask));
  out.casimir_threshold = out.threshold * scale;

  out.passed = out.relations.interior.max() <= out.threshold && out.casimir.max() <= out.casimir_threshold &&
               (!out.lambda_centrality || *out.lambda_centrality <= kCentralityThreshold);
  return out;
}

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

json envelope_json(const EnvelopeElement& e) {
  json out = json::array();
  for (const auto& [key, f] : e.monomials())
    out.push_back({{"raise", key.first}, {"lower", key.second}, {"p0_poly", to_json(f)}});
  return out;
}

std::string order_text(const PolyAlgebra& alg) {
  return alg.order() ? std::to_string(*alg.order()) : std::string("none");
}

json ledger_json(const FusionLedger& ledger) {
  json out{{"kind", to_string(ledger.kind)},
           {"left", ledger.l_name},
           {"right", ledger.m_name},
           {"lambda", ledger.lambda},
           {"lambda_meaning", ledger.kind == FusionKind::J ? "(L0 + M0)/2" : "(L0 - M0)/2"},
           {"mu2", ledger.mu2},
           {"casimir_l", ledger.casimir_l},
           {"casimir_m", ledger.casimir_m},
           {"renames", ledger.m_renames}};
  if (ledger.casimir_l_value) out["casimir_l_value"] = to_json(*ledger.casimir_l_value);
  if (ledger.casimir_m_value) out["casimir_m_value"] = to_json(*ledger.casimir_m_value);
  if (ledger.mu2_value) out["mu2_value"] = to_json(*ledger.mu2_value);
  return out;
}

class Executor {
 public:
  explicit Executor(const RunOptions& options) : options_(options) {
    for (const auto& name : builtin_names()) env_.emplace(name, Entry{builtin(name), std::nullopt});
  }

  RunResult finish() {
    if (options_.mode == OutputMode::json) result_.output = json_out_.dump(2) + "\n";
    else result_.output = text_.str();
    return result_;
  }

  void execute(const dsl::Statement& s) {
    try {
      std::visit([&](const auto& body) { handle(body); }, s.body);
    } catch (const ExecutionError&) {
      throw;
    } catch (const Error& e) {
      throw ExecutionError(e.what(), s.where);
    }
  }

 private:
  void handle(const dsl::AlgebraDef& d) {
    Entry entry{PolyAlgebra(d.name, d.phi), std::nullopt};
    env_.insert_or_assign(d.name, entry);
    emit_algebra("algebra", entry);
  }

  void handle(const dsl::LetFuse& f) {
    FuseOptions opts;
    opts.name = f.name;
    FusedAlgebra fused = fuse(f.kind, env_.at(f.left).algebra, env_.at(f.right).algebra, opts);
    Entry entry{fused.algebra, fused.ledger};
    env_.insert_or_assign(f.name, entry);
    emit_algebra("fuse", entry);
  }

  void handle(const dsl::LetSpecialize& s) {
    const PolyAlgebra& base = env_.at(s.target).algebra;
    std::map<std::string, CoeffExpr> assignments;
    for (const auto& [key, value] : s.assignments) {
      if (base.centrals().count(key) == 0)
        throw Error("'" + key + "' is not a central symbol of '" + s.target + "'");
      assignments.emplace(key, value);
    }
    PolyAlgebra narrowed = specialize(base, assignments);
    Entry entry{PolyAlgebra(s.name, narrowed.phi(), {}, narrowed.casimir_value()), std::nullopt};
    env_.insert_or_assign(s.name, entry);
    emit_algebra("specialize", entry);
  }

  void handle(const dsl::LetRecenter& r) {
    PolyAlgebra moved = recenter(env_.at(r.target).algebra, r.shift);
    Entry entry{PolyAlgebra(r.name, moved.phi(), {}, moved.casimir_value()), std::nullopt};
    env_.insert_or_assign(r.name, entry);
    emit_algebra("recenter", entry);
  }

  void handle(const dsl::Query& q) {
    const Entry& entry = env_.at(q.target);
    const PolyAlgebra& alg = entry.algebra;
    if (q.kind == dsl::QueryKind::show) {
      emit_algebra("show", entry);
      return;
    }
    const std::string word = q.kind == dsl::QueryKind::phi       ? "phi"
                             : q.kind == dsl::QueryKind::g       ? "g"
                             : q.kind == dsl::QueryKind::casimir ? "casimir"
                                                                 : "order";
    json value;
    std::string text;
    std::string latex;
    switch (q.kind) {
      case dsl::QueryKind::phi:
        value = to_json(alg.phi());
        text = to_text(alg.phi());
        latex = "[P_+, P_-] = " + to_latex(alg.phi());
        break;
      case dsl::QueryKind::g: {
        const P0Poly g = solve_g(alg.phi());
        value = to_json(g);
        text = to_text(g);
        latex = "g(P_0) = " + to_latex(g);
        break;
      }
      case dsl::QueryKind::casimir: {
        const EnvelopeElement c = casimir(alg);
        value = envelope_json(c);
        text = to_text(c);
        latex = "\\mathcal{C} = " + to_latex(c);
        break;
      }
      default:
        value = alg.order() ? json(*alg.order()) : json(nullptr);
        text = order_text(alg);
        latex = "\\text{order} = " + text;
        break;
    }
    switch (options_.mode) {
      case OutputMode::json:
        json_out_.push_back({{"statement", word}, {"name", q.target}, {"value", value}});
        break;
      case OutputMode::latex:
        text_ << "% " << word << " " << q.target << "\n" << latex << "\n";
        break;
      case OutputMode::text:
        text_ << word << " " << q.target << " = " << text << "\n";
        break;
    }
  }

  void handle(const dsl::Verify& v) {
    std::string name = v.target.name;
    if (v.target.inline_fuse) {
      name = "fuse(" + to_string(v.target.kind) + "," + v.target.left + "," + v.target.right + ")";
      FuseOptions opts;
      opts.name = name;
      FusedAlgebra fused = fuse(v.target.kind, env_.at(v.target.left).algebra, env_.at(v.target.right).algebra, opts);
      env_.insert_or_assign(name, Entry{fused.algebra, fused.ledger});
    }
    RepParams params = options_.params;
    for (const auto& [key, value] : v.params) params[key] = value;

    json record{{"statement", "verify"}, {"name", name}};
    try {
      VerifyOutcome out = verify_entry(env_, name, params);
      result_.verifications_ok = result_.verifications_ok && out.passed;
      record["relations"] = to_json(out.relations);
      record["casimir"] = {{"with_plus", out.casimir.with_plus},
                           {"with_minus", out.casimir.with_minus},
                           {"with_zero", out.casimir.with_zero}};
      if (out.lambda_centrality) record["lambda_centrality"] = *out.lambda_centrality;
      record["threshold"] = out.threshold;
      record["casimir_threshold"] = out.casimir_threshold;
      record["pass"] = out.passed;
      if (options_.mode == OutputMode::json) {
        json_out_.push_back(record);
        return;
      }
      const auto& r = out.relations;
      const std::string c = options_.mode == OutputMode::latex ? "% " : "";
      text_ << c << "verify " << name << " (dim " << r.dim << ", interior " << r.interior_states
            << " states, threshold " << sci(out.threshold) << ")\n";
      text_ << c << "  [P0,P+]-P+    interior " << sci(r.interior.raise) << "  boundary " << sci(r.boundary.raise)
            << "\n";
      text_ << c << "  [P0,P-]+P-    interior " << sci(r.interior.lower) << "  boundary " << sci(r.boundary.lower)
            << "\n";
      text_ << c << "  [P+,P-]-phi   interior " << sci(r.interior.commutator) << "  boundary "
            << sci(r.boundary.commutator) << "\n";
      text_ << c << "  [C,P+-,P0]    interior " << sci(out.casimir.max()) << "  (threshold "
            << sci(out.casimir_threshold) << ")\n";
      if (out.lambda_centrality) text_ << c << "  Lambda central " << sci(*out.lambda_centrality) << "\n";
      text_ << c << "  result: " << (out.passed ? "PASS" : "FAIL") << "\n";
    } catch (const RepError& e) {
      verification_failed(record, name, e.what());
    } catch (const VerificationError& e) {
      verification_failed(record, name, e.what());
    }
  }

  void verification_failed(json& record, const std::string& name, const std::string& why) {
    result_.verifications_ok = false;
    record["pass"] = false;
    record["error"] = why;
    if (options_.mode == OutputMode::json)
      json_out_.push_back(record);
    else
      text_ << (options_.mode == OutputMode::latex ? "% " : "") << "verify " << name << ": FAIL (" << why << ")\n";
  }

  void handle(const dsl::Expect& e) {
    const PolyAlgebra& alg = env_.at(e.target).algebra;
    const P0Poly actual = e.field == dsl::ExpectField::phi ? alg.phi() : solve_g(alg.phi());
    const bool match = actual == e.expected;
    result_.expectations_ok = result_.expectations_ok && match;
    const std::string field = e.field == dsl::ExpectField::phi ? "phi" : "g";
    if (options_.mode == OutputMode::json) {
      json record{{"statement", "expect"}, {"name", e.target}, {"field", field}, {"match", match}};
      if (!match) {
        record["actual"] = to_json(actual);
        record["difference"] = to_json(actual - e.expected);
      }
      json_out_.push_back(record);
      return;
    }
    const std::string c = options_.mode == OutputMode::latex ? "% " : "";
    text_ << c << "expect " << e.target << " " << field << ": " << (match ? "ok" : "MISMATCH") << "\n";
    if (!match) {
      text_ << c << "  actual     " << to_text(actual) << "\n";
      text_ << c << "  expected   " << to_text(e.expected) << "\n";
      text_ << c << "  difference " << to_text(actual - e.expected) << "\n";
    }
  }

  void emit_algebra(const std::string& statement, const Entry& entry) {
    const PolyAlgebra& alg = entry.algebra;
    const P0Poly g = solve_g(alg.phi());
    const EnvelopeElement cas = casimir(alg);
    switch (options_.mode) {
      case OutputMode::json: {
        json record{{"statement", statement},
                    {"name", alg.name()},
                    {"phi", to_json(alg.phi())},
                    {"order", alg.order() ? json(*alg.order()) : json(nullptr)},
                    {"g", to_json(g)},
                    {"casimir", envelope_json(cas)},
                    {"casimir_symbol", alg.casimir_symbol()},
                    {"centrals", alg.centrals()}};
        if (alg.casimir_value()) record["casimir_value"] = to_json(*alg.casimir_value());
        if (entry.fusion) record["ledger"] = ledger_json(*entry.fusion);
        json_out_.push_back(record);
        break;
      }
      case OutputMode::latex:
        text_ << "% " << statement << " " << alg.name() << " (order " << order_text(alg) << ")\n";
        text_ << "[P_+, P_-] = " << to_latex(alg.phi()) << "\n";
        text_ << "g(P_0) = " << to_latex(g) << "\n";
        text_ << "\\mathcal{C} = " << to_latex(cas) << "\n";
        break;
      case OutputMode::text:
        text_ << statement << " " << alg.name() << "\n";
        text_ << "  phi     = " << to_text(alg.phi()) << "\n";
        text_ << "  order   = " << order_text(alg) << "\n";
        text_ << "  g       = " << to_text(g) << "\n";
        text_ << "  casimir = " << to_text(cas) << "\n";
        if (alg.casimir_value()) text_ << "  casimir value = " << to_text(*alg.casimir_value()) << "\n";
        if (entry.fusion) emit_ledger(*entry.fusion);
        break;
    }
  }

  void emit_ledger(const FusionLedger& ledger) {
    const bool j = ledger.kind == FusionKind::J;
    text_ << "  central symbols:\n";
    text_ << "    " << ledger.lambda << " = " << (j ? "(L0 + M0)/2" : "(L0 - M0)/2") << " with L = " << ledger.l_name
          << ", M = " << ledger.m_name << "\n";
    if (ledger.mu2_value)
      text_ << "    mu^2 = " << to_text(*ledger.mu2_value) << "\n";
    else
      text_ << "    " << ledger.mu2 << " = mu^2\n";
    auto casimir_line = [&](const std::string& sym, const std::optional<CoeffExpr>& value, const std::string& of) {
      text_ << "    " << sym;
      if (value) text_ << " = " << to_text(*value) << " (pinned)";
      text_ << " : Casimir of " << of << "\n";
    };
    casimir_line(ledger.casimir_l, ledger.casimir_l_value, ledger.l_name);
    casimir_line(ledger.casimir_m, ledger.casimir_m_value, ledger.m_name);
    for (const auto& [from, to] : ledger.m_renames) text_ << "    " << to << " : " << from << " of " << ledger.m_name << "\n";
  }

  const RunOptions& options_;
  std::map<std::string, Entry> env_;
  RunResult result_;
  std::ostringstream text_;
  json json_out_ = json::array();
};

}  // namespace

RunResult run(const dsl::Program& program, const RunOptions& options) {
  Executor exec(options);
  for (const auto& s : program.statements) exec.execute(s);
  return exec.finish();
}

}  // namespace polyalg
