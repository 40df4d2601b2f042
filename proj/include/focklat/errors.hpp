#pragma once

#include <stdexcept>
#include <string>

namespace focklat {

// Raised when an internal invariant that should be mathematically
// impossible to violate (singular unimodular Gram, non-integer forgotten
// coefficient, ...) fails.  CLI maps this to exit code 3.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Raised on malformed external input (surface files, state files).
// CLI maps this to exit code 2.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace focklat
