#pragma once

#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "polyalg/coeffring.hpp"
#include "polyalg/fusion.hpp"

namespace polyalg::dsl {

struct Location {
  int line = 1;
  int column = 1;
  friend bool operator==(const Location&, const Location&) = default;
};

/// First error in a DSL source, with the set of tokens that would have been accepted.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, Location where, std::set<std::string> expected = {});

  const Location& where() const { return where_; }
  const std::set<std::string>& expected() const { return expected_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
  Location where_;
  std::set<std::string> expected_;
};

// algebra NAME(p, ...) { phi = poly; }
struct AlgebraDef {
  std::string name;
  std::vector<std::string> params;
  P0Poly phi;
  friend bool operator==(const AlgebraDef&, const AlgebraDef&) = default;
};

// let NAME = fuse(J|K, L, M);
struct LetFuse {
  std::string name;
  FusionKind kind = FusionKind::J;
  std::string left;
  std::string right;
  friend bool operator==(const LetFuse&, const LetFuse&) = default;
};

// let NAME = specialize(TARGET, sym = expr, ...);
struct LetSpecialize {
  std::string name;
  std::string target;
  std::vector<std::pair<std::string, CoeffExpr>> assignments;
  friend bool operator==(const LetSpecialize&, const LetSpecialize&) = default;
};

// let NAME = recenter(TARGET, expr);
struct LetRecenter {
  std::string name;
  std::string target;
  CoeffExpr shift;
  friend bool operator==(const LetRecenter&, const LetRecenter&) = default;
};

enum class QueryKind { show, phi, g, casimir, order };

// show|phi|g|casimir|order NAME;
struct Query {
  QueryKind kind = QueryKind::show;
  std::string target;
  friend bool operator==(const Query&, const Query&) = default;
};

/// Either a defined name or an inline fuse(K, L, M).
struct VerifyTarget {
  std::string name;
  bool inline_fuse = false;
  FusionKind kind = FusionKind::J;
  std::string left;
  std::string right;
  friend bool operator==(const VerifyTarget&, const VerifyTarget&) = default;
};

// verify TARGET [with (key = number, ...)];
struct Verify {
  VerifyTarget target;
  std::vector<std::pair<std::string, std::string>> params;
  friend bool operator==(const Verify&, const Verify&) = default;
};

enum class ExpectField { phi, g };

// expect NAME phi|g = poly;
struct Expect {
  std::string target;
  ExpectField field = ExpectField::phi;
  P0Poly expected;
  friend bool operator==(const Expect&, const Expect&) = default;
};

using StatementBody = std::variant<AlgebraDef, LetFuse, LetSpecialize, LetRecenter, Query, Verify, Expect>;

struct Statement {
  StatementBody body;
  Location where;
  /// Locations are not part of the program's meaning.
  friend bool operator==(const Statement& a, const Statement& b) { return a.body == b.body; }
};

struct Program {
  std::vector<Statement> statements;
  friend bool operator==(const Program&, const Program&) = default;
};

Program parse(const std::string& source);
/// Parses a standalone polynomial in P0 and free symbols.
P0Poly parse_poly(const std::string& source);

/// Canonical source text; parse(pretty_print(p)) == p.
std::string pretty_print(const Program& program);
std::string pretty_print(const Statement& statement);

}  // namespace polyalg::dsl
