#pragma once

#include <stdexcept>
#include <string>

namespace pcert {

// A comparison or function application was asked on a ball whose interval
// straddles the function's domain boundary (sqrt over negatives, division
// by a ball containing zero, log touching zero).
struct DomainStraddle : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested working precision exceeds the configured cap.
struct PrecisionOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A certificate or summand was evaluated at a point where one of its
// denominator factors vanishes. The message names the factor.
struct PoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the definitional domain of the quantity.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Inputs violate the hypotheses of the inequality being checked.
struct HypothesisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Lookup outside the range covered by a precomputed table.
struct RangeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace pcert
