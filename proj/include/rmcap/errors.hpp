#pragma once

#include <stdexcept>
#include <string>

namespace rmcap {

// Invalid argument values (bad n/r ranges, mismatched lengths, ...).
// The CLI maps this to exit code 2.
struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A guard refused to start a computation that would blow past the
// documented size limits.  The CLI maps this to exit code 3.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace rmcap
