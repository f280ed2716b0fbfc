#pragma once

#include <stdexcept>
#include <string>

namespace toral {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: unknown ids, violated preconditions, bad specs.
struct InvalidInput : Error {
    using Error::Error;
};

// A documented search cap or budget was exceeded.
struct CapExceeded : Error {
    using Error::Error;
};

// Arrangement violates general position (triple point, vertex on the
// square boundary); caller must re-offset.
struct DegenerateArrangement : Error {
    using Error::Error;
};

// A search that is guaranteed to succeed failed; indicates a bug in the
// arrangement construction rather than in the input.
struct SearchFailure : Error {
    using Error::Error;
};

}  // namespace toral
