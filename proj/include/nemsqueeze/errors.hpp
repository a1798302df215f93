// Error types. Exit-code mapping in the CLI: validation/parse -> 1,
// computation (overflow guard, quadrature budget) -> 2.
#pragma once

#include <stdexcept>
#include <string>

namespace nemsqueeze {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad user input: malformed JSON, unknown key, out-of-range value.
struct ParseError : Error {
  using Error::Error;
};
struct ValidationError : Error {
  using Error::Error;
};

// Computation errors.
struct TimeHorizonOverflow : Error {
  using Error::Error;
};
struct QuadratureNonConvergence : Error {
  using Error::Error;
};
struct MissingCarrierDensity : Error {
  using Error::Error;
};
struct MissingEffectiveMass : Error {
  using Error::Error;
};
struct WrongClamping : Error {
  using Error::Error;
};
struct NeverSqueezed : Error {
  using Error::Error;
};
struct NonPositiveRatio : Error {
  using Error::Error;
};
struct IncompatibleMetric : Error {
  using Error::Error;
};

}  // namespace nemsqueeze
