#pragma once

#include <stdexcept>

namespace lampspec {

// Caller passed something outside a documented precondition.
struct parameter_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A computation hit a hard size or time ceiling and was aborted.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal invariant failed; indicates a bug, not bad input.
struct invariant_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace lampspec
