#pragma once

#include <stdexcept>
#include <string>

namespace fcmlab {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller violated a documented precondition (bad dimension, bad parameter).
class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

/// A file could not be opened, read or written.
class IoError : public Error {
public:
    using Error::Error;
};

/// Input text (CSV, manifest) is malformed. Messages carry line numbers.
class ParseError : public Error {
public:
    using Error::Error;
};

/// The data cannot support the requested computation (too few distinct
/// points, zero total scatter, coincident centroids).
class DegenerateDataError : public Error {
public:
    using Error::Error;
};

/// A cluster lost all membership mass during a centroid update. The fit
/// driver treats this as a failed restart, not a fatal condition.
class EmptyClusterError : public Error {
public:
    using Error::Error;
};

/// A K range is too small for the requested analysis.
class InsufficientRangeError : public Error {
public:
    using Error::Error;
};

} // namespace fcmlab
