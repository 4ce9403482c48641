#ifndef STA_CORE_ERRORS_HPP
#define STA_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sta {

// Error taxonomy shared across the toolkit. Each type maps 1:1 onto a
// status code at the C boundary (see capi/sta_c.cpp).

struct MalformedBounds : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidConfig : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Rotation is undefined below the degenerate-norm threshold; callers
// substitute the fast rotation, which has no singularity.
struct DegenerateState : std::domain_error {
    using std::domain_error::domain_error;
};

// Translation needs a direction; callers skip the move when the two
// states coincide.
struct ZeroDirection : std::domain_error {
    using std::domain_error::domain_error;
};

// An objective produced a non-finite value.
struct EvaluationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MalformedParameters : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace sta

#endif
