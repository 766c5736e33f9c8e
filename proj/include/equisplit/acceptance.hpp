#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace equisplit {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct AcceptanceOptions {
  std::string fixture_dir;  // contains <name>/instance.json and <name>/expected.json
  std::uint64_t seed = 1;
};

// Runs the nine acceptance criteria in order. Criterion 8 reads the global
// invariant-violation counter, so it reflects everything run before it.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

}  // namespace equisplit
