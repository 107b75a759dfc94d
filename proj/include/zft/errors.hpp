#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zft {

/// Base of every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph6 or edge-list input. `offset()` is the byte position of
/// the first offending character.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Input exceeds a documented size limit of an exhaustive algorithm.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// A mathematical precondition does not hold (disconnected input, k out of range, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class InvalidEdgeError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A minor script that does not describe a valid contraction/deletion sequence.
class ScriptError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A JSON document that does not follow the declared layout.
class SchemaError : public Error {
public:
    using Error::Error;
};

/// Caller handed an object in the wrong state (e.g. an incomplete schedule).
class UsageError : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed. Always a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace zft
