#pragma once

#include <stdexcept>
#include <string>

namespace lbcnn {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Tensor extents disagree (wrong rank, channel mismatch, empty extent).
class ShapeError : public Error {
public:
    using Error::Error;
};

/// An index or center falls outside the accessible region.
class BoundsError : public Error {
public:
    using Error::Error;
};

/// A configuration value is outside its admissible range.
class ParamError : public Error {
public:
    using Error::Error;
};

/// Input data violates its contract (bad label, count mismatch).
class DataError : public Error {
public:
    using Error::Error;
};

/// A serialized file is malformed (bad magic, truncation, version).
class FormatError : public Error {
public:
    using Error::Error;
};

/// An operation was called in the wrong object state.
class StateError : public Error {
public:
    using Error::Error;
};

/// Training diverged or otherwise cannot continue.
class TrainError : public Error {
public:
    using Error::Error;
};

}  // namespace lbcnn
