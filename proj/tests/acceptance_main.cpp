// Acceptance suite: one [PASS]/[FAIL] line per criterion, details below each.

#include <cstdlib>
#include <iostream>
#include <sys/wait.h>

#include "polyalg/acceptance.hpp"

namespace {

int run_command(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

int main() {
  std::vector<polyalg::CriterionResult> results = polyalg::run_acceptance();

  polyalg::CriterionResult cli = polyalg::corpus_roundtrip(std::string(POLYALG_TEST_DATA) + "/dsl");
  cli.title = "CLI selftest and DSL corpus round trip";
  const int code = run_command(std::string(POLYALG_CLI) + " selftest >/dev/null 2>&1");
  const bool selftest_ok = code == 0;
  cli.passed = cli.passed && selftest_ok;
  cli.details.insert(cli.details.begin(),
                     std::string("[") + (selftest_ok ? "ok" : "FAIL") + "] polyalg selftest exit status " +
                         std::to_string(code) + " (need 0)");
  results.push_back(cli);

  polyalg::print_results(std::cout, results);
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.passed ? 1 : 0;
  std::cout << passed << "/" << results.size() << " criteria passed\n";
  return polyalg::all_passed(results) ? EXIT_SUCCESS : EXIT_FAILURE;
}
