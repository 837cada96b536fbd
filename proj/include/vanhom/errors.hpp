#pragma once

#include <stdexcept>
#include <string>

namespace vanhom {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (series, velocity, complex document).
class ParseError : public Error {
public:
    using Error::Error;
};

/// A decision needed a leading term that lies beyond the known precision.
class IndeterminateAtPrecision : public Error {
public:
    using Error::Error;
};

/// A geometric simplex whose vertices are affinely dependent.
class DegenerateSimplex : public Error {
public:
    using Error::Error;
};

/// A cell set that was required to be a subcomplex misses some face.
class NotFaceClosed : public Error {
public:
    using Error::Error;
};

/// `small` is not contained in `big`.
class NotNested : public Error {
public:
    using Error::Error;
};

/// A cell of positive dimension without a collapse rate.
class MissingRate : public Error {
public:
    using Error::Error;
};

/// Structurally invalid complex or arguments out of range.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Violated precondition of a pair/excision computation (e.g. bad W).
class PreconditionError : public Error {
public:
    using Error::Error;
};

}  // namespace vanhom
