#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polyalg {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::vector<std::string> details;
};

/// Runs acceptance criteria 1-8 (exact goldens, property suites, numeric checks).
std::vector<CriterionResult> run_acceptance(unsigned long seed = 20240601UL);

/// Criterion 9, library part: parse / pretty-print round trip over every
/// *.pa file in `corpus_dir`. Requires at least `min_files` files.
CriterionResult corpus_roundtrip(const std::string& corpus_dir, std::size_t min_files = 10);

/// Compile-time location of the repository's DSL corpus.
std::string default_corpus_dir();

/// One "[PASS] n. title" line per criterion, details indented below.
void print_results(std::ostream& os, const std::vector<CriterionResult>& results);
bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace polyalg
