#pragma once

#include <stdexcept>
#include <string>

namespace simdbench {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A requested array length is zero or too large to allocate.
class SizingError : public Error {
public:
    using Error::Error;
};

/// A kernel was called on data that violates its preconditions
/// (e.g. an offset scenario with fewer than three elements).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Malformed statistics input: too few samples, non-positive means.
class StatsError : public Error {
public:
    using Error::Error;
};

/// A report document could not be parsed.
class ReportError : public Error {
public:
    using Error::Error;
};

}  // namespace simdbench
