#pragma once

#include <stdexcept>
#include <string>

namespace posetmerge {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violated preconditions, malformed values, unknown labels, dimension mismatches.
struct DomainError : Error {
    using Error::Error;
};

// Malformed external input (JSON, .cxt, CLI mini-language).
struct ParseError : DomainError {
    using DomainError::DomainError;
};

// An instance is too large for the configured caps.
struct CapacityError : Error {
    using Error::Error;
};

} // namespace posetmerge
