#pragma once

#include <stdexcept>
#include <string>

namespace coinv {

/// Raised when an exact division leaves a remainder. Every division in this
/// library is a theorem, so this always indicates a bug upstream.
class NonExactDivision : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A rational class sum that should be an integer was not.
class NonIntegral : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Requested n is above the configured size cap.
class LimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A structural identity that must hold (a theorem) failed to hold.
class InvariantViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace coinv
