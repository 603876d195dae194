#pragma once

#include <stdexcept>
#include <string>

namespace minkdiff {

// Error taxonomy shared across modules. The CLI maps these to exit codes:
// std::invalid_argument / SchemaError -> 4, NumericFailure and children -> 3,
// failed checks (no exception) -> 2.

struct NumericFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotAdmissible : NumericFailure {
  using NumericFailure::NumericFailure;
};

struct NotImmersed : NumericFailure {
  using NumericFailure::NumericFailure;
};

struct OrientationError : NumericFailure {
  using NumericFailure::NumericFailure;
};

struct HypothesisViolated : NumericFailure {
  using NumericFailure::NumericFailure;
};

struct NoPath : NumericFailure {
  using NumericFailure::NumericFailure;
};

// Constant-width construction rejected; carries the largest amplitude that
// still passed the convexity scan.
struct EpsilonTooLarge : NumericFailure {
  EpsilonTooLarge(const std::string& msg, double max_eps)
      : NumericFailure(msg), max_epsilon(max_eps) {}
  double max_epsilon;
};

struct SchemaError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace minkdiff
