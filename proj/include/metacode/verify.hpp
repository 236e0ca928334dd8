#pragma once

#include <string>
#include <utility>
#include <vector>

#include "metacode/code.hpp"

namespace metacode {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string summary;
  std::vector<std::string> details;
  double seconds = 0;
};

// (group, q) pairs of the idempotent and audit suites
const std::vector<std::pair<std::string, u64>>& acceptance_matrix();

struct ExpectedExample {
  std::string id, group, kind, note;
  u64 q = 0, n = 0, k = 0, d = 0;
};

struct ExampleResult {
  ExpectedExample expected;
  u64 n = 0, k = 0;
  Distance d;
  bool pass = false;
  std::string note;
  double seconds = 0;
};

// data/examples.json unless METACODE_EXAMPLES names another file
std::string examples_path();
std::vector<ExpectedExample> load_examples(const std::string& path);
// only: ids to keep, all when empty; throws BadParameters for unknown ids
std::vector<ExampleResult> verify_examples(const std::vector<std::string>& only = {},
                                           const DistanceOptions& opt = {});

int criterion_count();
CriterionResult run_criterion(int id, const DistanceOptions& opt = {});

}  // namespace metacode
