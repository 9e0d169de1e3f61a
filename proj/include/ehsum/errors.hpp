#pragma once

#include <stdexcept>

namespace ehsum {

// Thrown by theta() when the argument is exactly zero.
struct ZeroArgument : std::domain_error {
  using std::domain_error::domain_error;
};

// Thrown when a truncated product hits its term cap before the tail bound
// is satisfied.
struct PrecisionExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A theta factor sitting in a denominator is numerically indistinguishable
// from zero at the configured floor.
struct DegenerateConfiguration : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A parameter set does not satisfy the balancing relation of the identity
// it is being used with.
struct ConstraintViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The parameter designated as solved-for would have to be zero.
struct ConstraintUnsolvable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The sampler gave up after the configured number of rejected draws.
struct SamplingExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownSuite : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace ehsum
