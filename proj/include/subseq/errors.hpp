#pragma once

#include <stdexcept>
#include <string>

namespace subseq {

/// Caller supplied something outside an operation's domain.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A brute-force routine refused to run because the input exceeds its size guard.
class GuardViolation : public std::length_error {
public:
    using std::length_error::length_error;
};

class NoRootError : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

} // namespace subseq
