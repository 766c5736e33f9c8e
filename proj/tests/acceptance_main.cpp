// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any failure.
#include <iostream>

#include "equisplit/acceptance.hpp"

int main() {
  equisplit::AcceptanceOptions options;
  options.fixture_dir = EQUISPLIT_FIXTURE_DIR;
  bool all = true;
  for (const auto& r : equisplit::run_acceptance(options)) {
    std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name << " (" << r.detail << ")\n";
    all = all && r.passed;
  }
  return all ? 0 : 1;
}
