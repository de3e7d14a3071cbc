#pragma once

#include <stdexcept>
#include <string>

namespace obm {

// Malformed instance or cut file. The message carries line/field context.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A size exceeded a configured cap (exact DP, full policy LP).
class CapacityError : public std::runtime_error {
 public:
  CapacityError(const std::string& what, long cap)
      : std::runtime_error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}
  long cap() const noexcept { return cap_; }

 private:
  long cap_;
};

// Input outside what a routine models, e.g. a static bound on time-varying weights.
class UnsupportedModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller-supplied object broke a documented contract (e.g. a policy
// matched an ad that was not available).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, long iterations)
      : std::runtime_error(what + " after " + std::to_string(iterations) + " iterations"),
        iterations_(iterations) {}
  long iterations() const noexcept { return iterations_; }

 private:
  long iterations_;
};

// A cutting-plane loop hit its round cap. The last bound is still a valid bound.
class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(const std::string& what, double last_bound, int rounds)
      : std::runtime_error(what + " (last bound " + std::to_string(last_bound) + ", " +
                           std::to_string(rounds) + " rounds)"),
        last_bound_(last_bound),
        rounds_(rounds) {}
  double last_bound() const noexcept { return last_bound_; }
  int rounds() const noexcept { return rounds_; }

 private:
  double last_bound_;
  int rounds_;
};

}  // namespace obm
