#pragma once

#include <stdexcept>
#include <string>

namespace c4c8 {

// Thrown when a configured search or closure budget runs out. Callers that can
// degrade to an "inconclusive" verdict catch this; everything else lets it
// propagate (the CLI maps it to exit code 3).
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace c4c8
