#pragma once

#include <stdexcept>
#include <string>

namespace modk {

// Precondition / malformed-input violations.
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Numerical checks that failed (e.g. a residual that should be ~0 is not).
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// File / stream problems.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace modk
