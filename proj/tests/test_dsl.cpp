#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "polyalg/dsl.hpp"
#include "polyalg/format.hpp"
#include "polyalg/random.hpp"
#include "polyalg/runner.hpp"

using namespace polyalg;
namespace fs = std::filesystem;

namespace {

const fs::path kData = POLYALG_TEST_DATA;

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

dsl::ParseError parse_error(const std::string& source) {
  try {
    dsl::parse(source);
  } catch (const dsl::ParseError& e) {
    return e;
  }
  FAIL("expected a parse error for: " << source);
  return dsl::ParseError("", {});
}

int cli(const std::string& args) {
  const std::string cmd = std::string(POLYALG_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("parse examples") {
  auto p = dsl::parse("algebra su2 { phi = 2*P0; }");
  REQUIRE(p.statements.size() == 1);
  auto def = std::get<dsl::AlgebraDef>(p.statements[0].body);
  CHECK(def.name == "su2");
  CHECK(def.phi == P0Poly::monomial(CoeffExpr(2), 1));

  p = dsl::parse("algebra higgs(h,a) { phi = 4*h*P0^3 + 2*a*P0; }");
  def = std::get<dsl::AlgebraDef>(p.statements[0].body);
  CHECK(def.params == std::vector<std::string>{"h", "a"});
  CHECK(def.phi == builtin("higgs").phi());

  p = dsl::parse("let c = fuse(J, su2, boson);");
  const auto fuse = std::get<dsl::LetFuse>(p.statements[0].body);
  CHECK(fuse.name == "c");
  CHECK(fuse.kind == FusionKind::J);
  CHECK(fuse.left == "su2");
  CHECK(fuse.right == "boson");
}

TEST_CASE("syntax error at the second caret") {
  const auto e = parse_error("algebra x { phi = P0^^2; }");
  CHECK(e.where().line == 1);
  CHECK(e.where().column == 22);
  CHECK(e.expected().count("UINT") == 1);
}

TEST_CASE("error locations and expected sets") {
  auto e = parse_error("show su2;\nlet q = fuse(L, su2, boson);");
  CHECK(e.where().line == 2);
  CHECK(e.where().column == 14);

  e = parse_error("let q = fuse(J, su2, nothing);");
  CHECK(std::string(e.what()).find("unknown identifier 'nothing'") != std::string::npos);

  e = parse_error("algebra a1 { phi = P0; }\nalgebra a1 { phi = 2*P0; }");
  CHECK(e.where().line == 2);
  CHECK(std::string(e.what()).find("duplicate definition") != std::string::npos);

  // A builtin may be shadowed once.
  CHECK(dsl::parse("algebra su2 { phi = P0; }").statements.size() == 1);
  e = parse_error("algebra su2 { phi = P0; }\nlet su2 = fuse(J, boson, boson);");
  CHECK(e.where().line == 2);

  // Symbols in phi must be declared parameters.
  e = parse_error("algebra a1(h) { phi = h*P0 + k; }");
  CHECK(std::string(e.what()).find("unknown identifier 'k'") != std::string::npos);

  e = parse_error("algebra a1 { phi = P0 }");
  CHECK(e.expected().count("';'") == 1);

  e = parse_error("let r = recenter(su2, P0);");
  CHECK(std::string(e.what()).find("P0") != std::string::npos);

  e = parse_error("algebra a1 { phi = 1/0; }");
  CHECK(std::string(e.what()).find("zero denominator") != std::string::npos);
}

TEST_CASE("comments and whitespace are ignored") {
  const auto a = dsl::parse("# leading\nalgebra  s\t{phi=2 * P0 ;}  # trailing\n\n");
  const auto b = dsl::parse("algebra s { phi = 2*P0; }");
  CHECK(a == b);
}

TEST_CASE("round trip over the corpus") {
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(kData / "dsl")) {
    if (entry.path().extension() != ".pa") continue;
    ++files;
    CAPTURE(entry.path().string());
    const auto first = dsl::parse(slurp(entry.path()));
    const std::string printed = dsl::pretty_print(first);
    const auto second = dsl::parse(printed);
    CHECK(first == second);
    CHECK(dsl::pretty_print(second) == printed);
  }
  CHECK(files >= 10);
}

TEST_CASE("round trip over random polynomials") {
  RandomAlgebras gen(3);
  for (int i = 0; i < 100; ++i) {
    const P0Poly p = gen.poly(gen.uniform(0, 6), i % 2 == 0);
    const std::string src = "algebra r(a, b, c) { phi = " + to_text(p) + "; }";
    CAPTURE(src);
    const auto prog = dsl::parse(src);
    REQUIRE(std::get<dsl::AlgebraDef>(prog.statements[0].body).phi == p);
    REQUIRE(dsl::parse(dsl::pretty_print(prog)) == prog);
  }
}

TEST_CASE("queries") {
  RunOptions text;
  const auto out = run(dsl::parse("algebra s { phi = 2*P0; }\ng s;\norder s;"), text);
  CHECK(out.output.find("g s = P0^2 + P0") != std::string::npos);
  CHECK(out.output.find("order s = 1") != std::string::npos);
  CHECK(out.exit_code() == 0);
}

TEST_CASE("expectations set the exit status") {
  CHECK(run(dsl::parse("expect su2 phi = 2*P0;")).exit_code() == 0);
  const auto bad = run(dsl::parse("expect su2 g = P0^2;"));
  CHECK(bad.exit_code() == 1);
  CHECK(bad.output.find("MISMATCH") != std::string::npos);
}

TEST_CASE("execution errors carry the statement location") {
  try {
    run(dsl::parse("show su2;\nlet s = specialize(su2, q = 1);"));
    FAIL("expected an execution error");
  } catch (const ExecutionError& e) {
    CHECK(e.where().line == 2);
  }
}

TEST_CASE("verification through the runner") {
  RunOptions opts;
  opts.params = {{"j", "1"}, {"cutoff", "10"}, {"mu", "1"}};
  const auto r = run(dsl::parse("verify fuse(J, su2, boson);"), opts);
  CHECK(r.exit_code() == 0);
  CHECK(r.output.find("result: PASS") != std::string::npos);

  // Symbols with no numeric value make the verification fail, not crash.
  const auto h = run(dsl::parse("verify higgs;"));
  CHECK(h.exit_code() == 1);
}

TEST_CASE("JSON output matches the golden files") {
  for (const std::string name : {"fusions", "higgs"}) {
    CAPTURE(name);
    RunOptions opts;
    opts.mode = OutputMode::json;
    const auto r = run(dsl::parse(slurp(kData / "golden" / (name + ".pa"))), opts);
    const auto expected = nlohmann::json::parse(slurp(kData / "golden" / (name + ".json")));
    CHECK(nlohmann::json::parse(r.output) == expected);
  }
}

TEST_CASE("JSON polynomial schema") {
  const P0Poly p = builtin("quadratic").phi();
  const nlohmann::json j = to_json(p);
  REQUIRE(j.contains("terms"));
  for (const auto& t : j["terms"]) {
    CHECK(t["p0_power"].is_number_integer());
    for (const auto& c : t["coeff"]) {
      CHECK(c["symbols"].is_object());
      CHECK(c["rational"].get<std::string>().find('/') != std::string::npos);
    }
  }
  CHECK(poly_from_json(j) == p);
  CHECK(poly_from_json(to_json(P0Poly())) == P0Poly());
}

TEST_CASE("LaTeX of the spin and su(1,1) fusion") {
  RunOptions opts;
  opts.mode = OutputMode::latex;
  const auto r = run(dsl::parse("let w = fuse(J, su2, su11);\nphi w;"), opts);
  CHECK(r.output.find("[P_+, P_-] = 4 \\mu^{2} P_0^{3} + \\left(-2 C_{J} \\mu^{2} + 2 C_{K} \\mu^{2} - 4 \\Lambda^{2} "
                      "\\mu^{2}\\right) P_0 + 2 C_{J} \\Lambda \\mu^{2} + 2 C_{K} \\Lambda \\mu^{2}") !=
        std::string::npos);
  const std::string golden = slurp(kData / "golden" / "fusions.tex");
  RunOptions again;
  again.mode = OutputMode::latex;
  CHECK(run(dsl::parse(slurp(kData / "golden" / "fusions.pa")), again).output == golden);
  CHECK(to_latex(dsl::parse_poly("1/2*a*P0^2 - 3")) == "\\frac{1}{2} a P_0^{2} - 3");
}

TEST_CASE("command line exit codes") {
  const std::string corpus = (kData / "dsl").string();
  CHECK(cli("check " + corpus + "/05_higgs.pa") == 0);
  CHECK(cli("eval " + corpus + "/07_su2_boson.pa") == 0);
  CHECK(cli("eval --format json " + corpus + "/10_su11_su11.pa") == 0);
  CHECK(cli("verify " + corpus + "/04_boson.pa --params cutoff=14") == 0);
  CHECK(cli("verify " + corpus + "/04_boson.pa --params cutoff") == 2);
  CHECK(cli("eval --format yaml " + corpus + "/05_higgs.pa") == 2);
  CHECK(cli("frobnicate") == 2);

  const fs::path tmp = fs::temp_directory_path() / "polyalg_cli_test.pa";
  std::ofstream(tmp) << "algebra x { phi = P0^^2; }\n";
  CHECK(cli("check " + tmp.string()) == 2);
  std::ofstream(tmp) << "expect su2 phi = 3*P0;\n";
  CHECK(cli("eval " + tmp.string()) == 1);
  std::ofstream(tmp) << "verify su2 with (j = 1);\n";
  CHECK(cli("verify " + tmp.string() + " --params tol=1e-12") == 0);
  std::ofstream(tmp) << "verify higgs;\n";
  CHECK(cli("eval " + tmp.string()) == 1);
  fs::remove(tmp);
}
