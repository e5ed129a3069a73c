#pragma once

#include <stdexcept>
#include <string>

namespace tpqr {

// Two values built over distinct (p,q,r) configurations were combined.
struct ConfigMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotInvertibleError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Cycle entries must all be >= 2 (negated self-intersections of rational curves).
struct NotACycleError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The all-twos cycle belongs to the simple-elliptic boundary case and has no dual.
struct NotHyperbolicError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A relation mixes degrees or endpoints.
struct GradingError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Invariant violation inside the library; always a bug, never user input.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace tpqr
