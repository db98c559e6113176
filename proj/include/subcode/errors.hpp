#pragma once

#include <stdexcept>
#include <string>

namespace subcode {

/// Precondition or contract violation by the caller (bad shapes, mismatched
/// fields, malformed input).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An exhaustive scan would exceed the configured enumeration budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The request is well formed but cannot be satisfied (channel dimensions,
/// code size unreachable under the distance floor).
class Infeasible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace subcode
