#pragma once

#include <stdexcept>
#include <string>

namespace pslab {

/// Base of every error raised by the library. The CLI maps these to exit code 1
/// (except MalformedDecimal, which is a usage error).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MalformedDecimal : public Error {
public:
    explicit MalformedDecimal(const std::string& text)
        : Error("malformed decimal: '" + text + "'") {}
};

class AlphaNotGreaterThanOne : public Error {
public:
    explicit AlphaNotGreaterThanOne(const std::string& text)
        : Error("exponent must be greater than 1, got " + text) {}
};

class OverflowError : public Error {
public:
    using Error::Error;
};

class CapExceeded : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class NoConvergence : public Error {
public:
    using Error::Error;
};

class IntervalTooLarge : public Error {
public:
    using Error::Error;
};

class HypothesisViolated : public Error {
public:
    using Error::Error;
};

// Raised when an interval that a lemma guarantees to be nonempty comes out
// empty. Seeing one means a bug, not bad input.
class EmptyInterval : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace pslab
