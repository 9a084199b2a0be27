#pragma once

#include <stdexcept>
#include <string>

namespace koszul {

/// Malformed input: bad model JSON, violated curve invariants, bad parameters.
class ModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An invariant that is backed by a theorem (or by the construction) failed.
/// Always a bug in a model or in the engine; runs abort with exit code 1.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A seeded search (general points, secant witnesses) ran out of attempts.
/// Distinct from a refutation; runs report exit code 2.
class SamplingExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace koszul
