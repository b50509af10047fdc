#pragma once

#include <cstddef>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace binomlab {

// Outcome of a verification sweep. `failures` holds one human-readable
// counterexample per violated instance; empty means the sweep passed.
struct CheckReport {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool pass() const { return failures.empty(); }
  void fail(std::string witness) { failures.push_back(std::move(witness)); }
};

// Hard guard against accidental q^k blowup in enumeration code.
// CARLITZ_BUDGET overrides the default.
inline unsigned long default_enumeration_budget() {
  if (const char* env = std::getenv("CARLITZ_BUDGET")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 1000000ul;
}

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace binomlab
