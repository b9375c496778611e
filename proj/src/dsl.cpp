#include "polyalg/dsl.hpp"

#include <cctype>
#include <sstream>

#include "polyalg/algebra.hpp"
#include "polyalg/format.hpp"

namespace polyalg::dsl {

namespace {

std::string format_error(const std::string& message, const Location& where, const std::set<std::string>& expected) {
  std::ostringstream os;
  os << where.line << ":" << where.column << ": " << message;
  if (!expected.empty()) {
    os << " (expected ";
    bool first = true;
    for (const auto& e : expected) {
      os << (first ? "" : ", ") << e;
      first = false;
    }
    os << ")";
  }
  return os.str();
}

}  // namespace

ParseError::ParseError(const std::string& message, Location where, std::set<std::string> expected)
    : Error(format_error(message, where, expected)),
      detail_(message),
      where_(where),
      expected_(std::move(expected)) {}

namespace {

enum class TokenKind { ident, number, punct, end };

struct Token {
  TokenKind kind = TokenKind::end;
  std::string text;
  Location where;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case TokenKind::end:
      return "end of input";
    case TokenKind::number:
      return "number '" + t.text + "'";
    case TokenKind::ident:
      return "identifier '" + t.text + "'";
    case TokenKind::punct:
      return "'" + t.text + "'";
  }
  return "token";
}

std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.where = {line, col};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      t.kind = TokenKind::ident;
      t.text = src.substr(i, j - i);
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j + 1 < src.size() && src[j] == '.' && std::isdigit(static_cast<unsigned char>(src[j + 1]))) {
        ++j;
        while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      }
      t.kind = TokenKind::number;
      t.text = src.substr(i, j - i);
      advance(j - i);
    } else if (std::string("{}(),;=+-*/^.").find(c) != std::string::npos) {
      t.kind = TokenKind::punct;
      t.text = std::string(1, c);
      advance(1);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", t.where);
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.where = {line, col};
  out.push_back(end);
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& source) : tokens_(tokenize(source)) {
    for (const auto& name : builtin_names()) defined_.insert(name);
  }

  Program program() {
    Program p;
    while (peek().kind != TokenKind::end) p.statements.push_back(statement());
    return p;
  }

  P0Poly standalone_poly() {
    P0Poly p = poly(nullptr);
    if (peek().kind != TokenKind::end) fail_expected({"'+'", "'-'", "'*'", "end of input"});
    return p;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail_expected(const std::set<std::string>& expected) const {
    throw ParseError("unexpected " + describe(peek()), peek().where, expected);
  }

  bool is_punct(const std::string& p) const { return peek().kind == TokenKind::punct && peek().text == p; }
  bool is_word(const std::string& w) const { return peek().kind == TokenKind::ident && peek().text == w; }

  void punct(const std::string& p) {
    if (!is_punct(p)) fail_expected({"'" + p + "'"});
    next();
  }

  void word(const std::string& w) {
    if (!is_word(w)) fail_expected({"'" + w + "'"});
    next();
  }

  Token ident() {
    if (peek().kind != TokenKind::ident) fail_expected({"identifier"});
    return next();
  }

  std::string defined_name() {
    Token t = ident();
    if (defined_.count(t.text) == 0) throw ParseError("unknown identifier '" + t.text + "'", t.where);
    return t.text;
  }

  void define(const Token& t) {
    // A builtin may be shadowed by one user definition; user names are defined once.
    if (!user_defined_.insert(t.text).second) throw ParseError("duplicate definition of '" + t.text + "'", t.where);
    defined_.insert(t.text);
  }

  Statement statement() {
    const Location where = peek().where;
    if (is_word("algebra")) return {algebra_def(), where};
    if (is_word("let")) return {let_statement(), where};
    if (is_word("verify")) return {verify(), where};
    if (is_word("expect")) return {expect(), where};
    for (const auto& [kw, kind] : query_words()) {
      if (is_word(kw)) {
        next();
        Query q{kind, defined_name()};
        punct(";");
        return {q, where};
      }
    }
    fail_expected({"'algebra'", "'let'", "'verify'", "'expect'", "'show'", "'phi'", "'g'", "'casimir'", "'order'"});
  }

  static const std::vector<std::pair<std::string, QueryKind>>& query_words() {
    static const std::vector<std::pair<std::string, QueryKind>> words{{"show", QueryKind::show},
                                                                      {"phi", QueryKind::phi},
                                                                      {"g", QueryKind::g},
                                                                      {"casimir", QueryKind::casimir},
                                                                      {"order", QueryKind::order}};
    return words;
  }

  AlgebraDef algebra_def() {
    word("algebra");
    Token name = ident();
    AlgebraDef def;
    def.name = name.text;
    std::set<std::string> params;
    if (is_punct("(")) {
      next();
      do {
        Token p = ident();
        if (p.text == "P0") throw ParseError("'P0' cannot be a parameter", p.where);
        if (!params.insert(p.text).second) throw ParseError("duplicate parameter '" + p.text + "'", p.where);
        def.params.push_back(p.text);
      } while (is_punct(",") && (next(), true));
      punct(")");
    }
    punct("{");
    word("phi");
    punct("=");
    def.phi = poly(&params);
    punct(";");
    punct("}");
    define(name);
    return def;
  }

  StatementBody let_statement() {
    word("let");
    Token name = ident();
    punct("=");
    if (is_word("fuse")) {
      next();
      punct("(");
      LetFuse f;
      f.name = name.text;
      f.kind = fusion_kind();
      punct(",");
      f.left = defined_name();
      punct(",");
      f.right = defined_name();
      punct(")");
      punct(";");
      define(name);
      return f;
    }
    if (is_word("specialize")) {
      next();
      punct("(");
      LetSpecialize s;
      s.name = name.text;
      s.target = defined_name();
      std::set<std::string> keys;
      while (is_punct(",")) {
        next();
        Token key = ident();
        if (key.text == "P0") throw ParseError("'P0' cannot be specialized", key.where);
        if (!keys.insert(key.text).second) throw ParseError("duplicate assignment to '" + key.text + "'", key.where);
        punct("=");
        s.assignments.emplace_back(key.text, coeff_expr());
      }
      punct(")");
      punct(";");
      define(name);
      return s;
    }
    if (is_word("recenter")) {
      next();
      punct("(");
      LetRecenter r;
      r.name = name.text;
      r.target = defined_name();
      punct(",");
      r.shift = coeff_expr();
      punct(")");
      punct(";");
      define(name);
      return r;
    }
    fail_expected({"'fuse'", "'specialize'", "'recenter'"});
  }

  FusionKind fusion_kind() {
    if (is_word("J") || is_word("K")) return parse_fusion_kind(next().text);
    fail_expected({"'J'", "'K'"});
  }

  Verify verify() {
    word("verify");
    Verify v;
    if (is_word("fuse") && tokens_[pos_ + 1].kind == TokenKind::punct && tokens_[pos_ + 1].text == "(") {
      next();
      punct("(");
      v.target.inline_fuse = true;
      v.target.kind = fusion_kind();
      punct(",");
      v.target.left = defined_name();
      punct(",");
      v.target.right = defined_name();
      punct(")");
    } else {
      v.target.name = defined_name();
    }
    if (is_word("with")) {
      next();
      punct("(");
      if (!is_punct(")")) {
        do {
          std::string key = ident().text;
          while (is_punct(".")) {
            next();
            key += "." + ident().text;
          }
          punct("=");
          v.params.emplace_back(key, number_text());
        } while (is_punct(",") && (next(), true));
      }
      punct(")");
    }
    punct(";");
    return v;
  }

  std::string number_text() {
    std::string out;
    if (is_punct("-")) {
      next();
      out = "-";
    }
    if (peek().kind != TokenKind::number) fail_expected({"number"});
    out += next().text;
    if (is_punct("/")) {
      next();
      if (peek().kind != TokenKind::number) fail_expected({"number"});
      out += "/" + next().text;
    }
    return out;
  }

  Expect expect() {
    word("expect");
    Expect e;
    e.target = defined_name();
    if (is_word("phi")) {
      e.field = ExpectField::phi;
    } else if (is_word("g")) {
      e.field = ExpectField::g;
    } else {
      fail_expected({"'phi'", "'g'"});
    }
    next();
    punct("=");
    e.expected = poly(nullptr);
    punct(";");
    return e;
  }

  CoeffExpr coeff_expr() {
    const Location where = peek().where;
    P0Poly p = poly(nullptr);
    if (p.degree().value_or(0) > 0) throw ParseError("'P0' is not allowed in a central expression", where);
    return p.coeff(0);
  }

  // poly := ('+'|'-')? term (('+'|'-') term)*
  P0Poly poly(const std::set<std::string>* allowed) {
    P0Poly out;
    bool negative = false;
    if (is_punct("+") || is_punct("-")) negative = next().text == "-";
    out = term(allowed);
    if (negative) out = -out;
    while (is_punct("+") || is_punct("-")) {
      negative = next().text == "-";
      P0Poly t = term(allowed);
      out = negative ? out - t : out + t;
    }
    return out;
  }

  // term := (rational | factor) ('*' factor)*
  P0Poly term(const std::set<std::string>* allowed) {
    P0Poly out;
    if (peek().kind == TokenKind::number) {
      out = P0Poly(CoeffExpr(rational()));
    } else if (peek().kind == TokenKind::ident) {
      out = factor(allowed);
    } else {
      fail_expected({"number", "identifier", "'P0'"});
    }
    while (is_punct("*")) {
      next();
      out *= factor(allowed);
    }
    return out;
  }

  Rational rational() {
    Token num = next();
    if (num.text.find('.') != std::string::npos) throw ParseError("expected an integer or fraction", num.where);
    std::string text = num.text;
    if (is_punct("/")) {
      next();
      if (peek().kind != TokenKind::number || peek().text.find('.') != std::string::npos) fail_expected({"UINT"});
      Token den = next();
      if (den.text.find_first_not_of('0') == std::string::npos) throw ParseError("zero denominator", den.where);
      text += "/" + den.text;
    }
    return parse_rational(text);
  }

  unsigned exponent() {
    if (!is_punct("^")) return 1;
    next();
    if (peek().kind != TokenKind::number || peek().text.find('.') != std::string::npos) fail_expected({"UINT"});
    Token t = next();
    if (t.text.size() > 6) throw ParseError("exponent too large", t.where);
    return static_cast<unsigned>(std::stoul(t.text));
  }

  // factor := ('P0' | IDENT) ('^' UINT)?
  P0Poly factor(const std::set<std::string>* allowed) {
    Token t = ident();
    if (t.text == "P0") return P0Poly::monomial(CoeffExpr(1), exponent());
    if (allowed != nullptr && allowed->count(t.text) == 0)
      throw ParseError("unknown identifier '" + t.text + "'", t.where);
    return P0Poly(CoeffExpr::symbol(t.text, exponent()));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::set<std::string> defined_;
  std::set<std::string> user_defined_;
};

std::string query_word(QueryKind kind) {
  switch (kind) {
    case QueryKind::show:
      return "show";
    case QueryKind::phi:
      return "phi";
    case QueryKind::g:
      return "g";
    case QueryKind::casimir:
      return "casimir";
    case QueryKind::order:
      return "order";
  }
  return "show";
}

struct Printer {
  std::string operator()(const AlgebraDef& d) const {
    std::string out = "algebra " + d.name;
    if (!d.params.empty()) {
      out += "(";
      for (std::size_t i = 0; i < d.params.size(); ++i) out += (i ? ", " : "") + d.params[i];
      out += ")";
    }
    return out + " { phi = " + to_text(d.phi) + "; }";
  }
  std::string operator()(const LetFuse& f) const {
    return "let " + f.name + " = fuse(" + to_string(f.kind) + ", " + f.left + ", " + f.right + ");";
  }
  std::string operator()(const LetSpecialize& s) const {
    std::string out = "let " + s.name + " = specialize(" + s.target;
    for (const auto& [key, value] : s.assignments) out += ", " + key + " = " + to_text(value);
    return out + ");";
  }
  std::string operator()(const LetRecenter& r) const {
    return "let " + r.name + " = recenter(" + r.target + ", " + to_text(r.shift) + ");";
  }
  std::string operator()(const Query& q) const { return query_word(q.kind) + " " + q.target + ";"; }
  std::string operator()(const Verify& v) const {
    std::string out = "verify ";
    if (v.target.inline_fuse)
      out += "fuse(" + to_string(v.target.kind) + ", " + v.target.left + ", " + v.target.right + ")";
    else
      out += v.target.name;
    if (!v.params.empty()) {
      out += " with (";
      for (std::size_t i = 0; i < v.params.size(); ++i)
        out += (i ? ", " : "") + v.params[i].first + " = " + v.params[i].second;
      out += ")";
    }
    return out + ";";
  }
  std::string operator()(const Expect& e) const {
    return "expect " + e.target + (e.field == ExpectField::phi ? " phi = " : " g = ") + to_text(e.expected) + ";";
  }
};

}  // namespace

Program parse(const std::string& source) { return Parser(source).program(); }

P0Poly parse_poly(const std::string& source) { return Parser(source).standalone_poly(); }

std::string pretty_print(const Statement& statement) { return std::visit(Printer{}, statement.body); }

std::string pretty_print(const Program& program) {
  std::string out;
  for (const auto& s : program.statements) out += pretty_print(s) + "\n";
  return out;
}

}  // namespace polyalg::dsl
