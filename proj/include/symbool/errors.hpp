#pragma once

#include <stdexcept>
#include <string>

namespace symbool {

// An argument index lies outside its admissible range.
struct RangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Two operands live on different variable counts or vector lengths.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The requested object does not exist (e.g. a coefficient on sigma_j with j > n).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// The input function does not meet a construction's precondition.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Input too large for an exact computation, or a time budget ran out.
struct CapabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input.
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An internal consistency check failed. Always a library defect.
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace symbool
