#pragma once

#include <stdexcept>
#include <string>

namespace ogr {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad parameters supplied by the caller (k > n, degree over the cap, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A mathematical invariant failed to hold. Always a bug or corrupted input.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

/// Two independent computations of the same quantity disagree.
class OracleDisagreement : public Error {
public:
    using Error::Error;
};

/// The question cannot be answered within the configured degree range.
class Inconclusive : public Error {
public:
    using Error::Error;
};

}  // namespace ogr
