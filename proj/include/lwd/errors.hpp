#pragma once

#include <stdexcept>
#include <string>

namespace lwd {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: matrix files, permutation files, JSON reports.
class ParseError : public Error {
public:
    using Error::Error;
};

/// An operation was called with arguments violating its contract.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An enumeration would exceed the configured size cap.
class CapError : public Error {
public:
    using Error::Error;
};

/// Exact integer arithmetic failed (non-integral division, negative count)
/// or a verified identity does not hold on the given data.
class IdentityError : public Error {
public:
    using Error::Error;
};

}  // namespace lwd
