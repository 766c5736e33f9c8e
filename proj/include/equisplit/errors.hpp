#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace equisplit {

// Raised when a property that holds for every valid input fails at runtime.
// These indicate corrupted input that slipped past validation, or a bug.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what);
};

// Number of InvariantViolation objects constructed in this process.
std::size_t invariant_violation_count();

[[noreturn]] void raise_invariant(const std::string& what);

}  // namespace equisplit
