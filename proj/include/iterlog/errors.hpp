#pragma once

#include <stdexcept>
#include <string>

namespace iterlog {

// Base for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation was applied outside its mathematical domain.
struct DomainError : Error {
    using Error::Error;
};

// g(0) != 0 in f o g.
struct CompositionDomainError : DomainError {
    using DomainError::DomainError;
};

// A required inverse (of a leading coefficient, diagonal entry, ...) does not exist.
struct NotInvertibleError : DomainError {
    using DomainError::DomainError;
};

// Window sizes disagree or are too small.
struct DimensionError : Error {
    using Error::Error;
};

// A series is not known to a high enough order for the request.
struct OrderError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

// The input violates a documented precondition that is checked at runtime
// (e.g. a pair (f, h) that does not satisfy Julia's equation).
struct PreconditionFailure : Error {
    using Error::Error;
};

}  // namespace iterlog
