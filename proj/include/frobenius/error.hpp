#pragma once

#include <stdexcept>
#include <string>

namespace frobenius {

// Raised when an operation's input violates a stated precondition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raised when the gcd of a coin system or generator set is not 1.
class NotCoprimeError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

// Two independent computations of the same quantity disagreed.
class OracleMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace frobenius
