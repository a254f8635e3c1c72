#pragma once

#include <stdexcept>
#include <string>

namespace hyperbb {

// Thrown by solve_bracketed when f(lo) and f(hi) have the same sign.
class no_sign_change_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown by iterative solvers that exhaust max_iterations.
class convergence_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when an exact mode enumeration would visit more lattice sites
// than the caller's budget allows.
class enumeration_budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when a physical quantity exceeds double range even though its
// logarithm is finite; the log value is preserved for the caller.
class overflow_range_error : public std::range_error {
 public:
  overflow_range_error(const std::string& what, double log_value)
      : std::range_error(what), log_value_(log_value) {}
  double log_value() const noexcept { return log_value_; }

 private:
  double log_value_;
};

}  // namespace hyperbb
