#pragma once

#include <stdexcept>
#include <string>

namespace swk {

struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// An existence condition or integrability condition does not hold for the data.
struct ConditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// An exact identity failed; what() names it.
struct IdentityFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace swk
