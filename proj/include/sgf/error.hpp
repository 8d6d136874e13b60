#pragma once

#include <stdexcept>
#include <string>

namespace sgf {

// Argument outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Empty or zero-variance field where a nondegenerate one is required.
struct DegenerateFieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A construction whose certificate could not be verified.
struct ConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Requested scale finer than the underlying grid (or beyond its extent).
struct ResolutionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Point or lag outside the tabulated region.
struct ExtentError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// Inputs do not satisfy the hypothesis an operation is built on.
struct HypothesisError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Named inequality failed beyond its slack budget.
struct ValidatorFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace sgf
