#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "polyalg/dsl.hpp"
#include "polyalg/fusion.hpp"
#include "polyalg/matrixrep.hpp"

namespace polyalg {

enum class OutputMode { text, json, latex };

OutputMode parse_output_mode(const std::string& text);

/// Runtime failure of a statement, tagged with its source location.
class ExecutionError : public Error {
 public:
  ExecutionError(const std::string& message, dsl::Location where);
  const dsl::Location& where() const { return where_; }

 private:
  dsl::Location where_;
};

/// Named algebra in a program, with enough provenance to build matrix realizations.
struct Entry {
  PolyAlgebra algebra;
  std::optional<FusionLedger> fusion;
};

/// Parameters for matrix realizations. Keys may be qualified by factor path
/// ("l.j", "m.l.cutoff"); unqualified keys apply at every level.
using RepParams = std::map<std::string, std::string>;

/// Builds a matrix realization for a registered algebra: su2/su11/boson shapes
/// directly, fused algebras as tensor products of their factors.
Rep realize(const std::map<std::string, Entry>& env, const std::string& name, const RepParams& params);

struct VerifyOutcome {
  ResidualReport relations;
  CasimirReport casimir;
  std::optional<double> lambda_centrality;
  double threshold = 0.0;
  double casimir_threshold = 0.0;
  bool passed = false;
};

VerifyOutcome verify_entry(const std::map<std::string, Entry>& env, const std::string& name, const RepParams& params);

struct RunResult {
  std::string output;
  bool verifications_ok = true;
  bool expectations_ok = true;
  int exit_code() const { return verifications_ok && expectations_ok ? 0 : 1; }
};

struct RunOptions {
  OutputMode mode = OutputMode::text;
  /// Defaults for every verify statement; statement-level params take precedence.
  RepParams params;
};

/// Executes statements in order. Throws ExecutionError on the first failing statement.
RunResult run(const dsl::Program& program, const RunOptions& options = {});

}  // namespace polyalg
