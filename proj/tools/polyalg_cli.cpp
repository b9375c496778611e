// polyalg: construct, fuse and verify three-dimensional polynomial algebras.
//
//   polyalg check <file>
//   polyalg eval <file> [--format text|json|latex]
//   polyalg verify <file> --params k=v,...
//   polyalg selftest
//
// Exit status: 0 success, 1 verification or expectation failure, 2 parse/usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "polyalg/acceptance.hpp"
#include "polyalg/dsl.hpp"
#include "polyalg/runner.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw polyalg::Error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

polyalg::RepParams parse_params(const std::string& text) {
  polyalg::RepParams params;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
      throw polyalg::Error("malformed parameter '" + item + "' (expected key=value)");
    params[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return params;
}

int run_file(const std::string& path, const polyalg::RunOptions& options) {
  polyalg::dsl::Program program;
  try {
    program = polyalg::dsl::parse(read_file(path));
  } catch (const polyalg::Error& e) {
    std::cerr << path << ":" << e.what() << "\n";
    return kUsage;
  }
  try {
    const polyalg::RunResult result = polyalg::run(program, options);
    std::cout << result.output;
    return result.exit_code();
  } catch (const polyalg::ExecutionError& e) {
    std::cerr << path << ":" << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct, fuse and verify three-dimensional polynomial algebras"};
  app.require_subcommand(1);

  std::string check_file;
  auto* check = app.add_subcommand("check", "Parse a DSL file and report the first error");
  check->add_option("file", check_file, "DSL source")->required();

  std::string eval_file;
  std::string format = "text";
  auto* eval = app.add_subcommand("eval", "Run a DSL file and print results");
  eval->add_option("file", eval_file, "DSL source")->required();
  eval->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));

  std::string verify_file;
  std::string params_text;
  std::string verify_format = "text";
  auto* verify = app.add_subcommand("verify", "Run a DSL file with matrix-realization parameters");
  verify->add_option("file", verify_file, "DSL source")->required();
  verify->add_option("--params", params_text, "Comma-separated key=value list (j, k, cutoff, mu, tol, l.j, ...)")
      ->required();
  verify->add_option("--format", verify_format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));

  std::string corpus = polyalg::default_corpus_dir();
  auto* selftest = app.add_subcommand("selftest", "Run the acceptance criteria");
  selftest->add_option("--corpus", corpus, "DSL corpus directory (unused by criteria 1-8)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (check->parsed()) {
      const auto program = polyalg::dsl::parse(read_file(check_file));
      std::cout << check_file << ": ok (" << program.statements.size() << " statements)\n";
      return kOk;
    }
    if (eval->parsed()) {
      polyalg::RunOptions options;
      options.mode = polyalg::parse_output_mode(format);
      return run_file(eval_file, options);
    }
    if (verify->parsed()) {
      polyalg::RunOptions options;
      options.mode = polyalg::parse_output_mode(verify_format);
      options.params = parse_params(params_text);
      return run_file(verify_file, options);
    }
    if (selftest->parsed()) {
      const auto results = polyalg::run_acceptance();
      polyalg::print_results(std::cout, results);
      return polyalg::all_passed(results) ? kOk : kFailed;
    }
  } catch (const polyalg::dsl::ParseError& e) {
    std::cerr << check_file << ":" << e.what() << "\n";
    return kUsage;
  } catch (const polyalg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
