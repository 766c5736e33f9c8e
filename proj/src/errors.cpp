#include "equisplit/errors.hpp"

#include <atomic>

namespace equisplit {

namespace {
std::atomic<std::size_t> g_violations{0};
}

InvariantViolation::InvariantViolation(const std::string& what)
    : std::logic_error("invariant violated: " + what) {
  g_violations.fetch_add(1, std::memory_order_relaxed);
}

std::size_t invariant_violation_count() {
  return g_violations.load(std::memory_order_relaxed);
}

void raise_invariant(const std::string& what) { throw InvariantViolation(what); }

}  // namespace equisplit
