#pragma once

#include <stdexcept>
#include <string>

namespace xint {

/// A claimed property failed on a concrete instance. `witness()` carries the
/// offending configuration serialized as JSON so the run can be replayed.
class InvariantViolation : public std::logic_error {
 public:
  InvariantViolation(const std::string& what, std::string witness)
      : std::logic_error(what), witness_(std::move(witness)) {}

  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

/// A search exceeded its node budget before closing the optimality proof.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace xint
