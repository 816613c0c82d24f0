#pragma once

#include <stdexcept>
#include <string>

namespace quadlab {

// Base class for everything thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Operand shapes do not line up.
struct DimensionError : Error {
    using Error::Error;
};

// Input data violates a documented precondition (e.g. unnormalized target rows).
struct ValidationError : Error {
    using Error::Error;
};

// API misuse (e.g. backward from a non-scalar node).
struct UsageError : Error {
    using Error::Error;
};

// Bad run/benchmark configuration.
struct ConfigError : Error {
    using Error::Error;
};

// Token id outside the vocabulary.
struct VocabularyError : Error {
    using Error::Error;
};

// File read/write failure; message carries the offending path.
struct IoError : Error {
    using Error::Error;
};

// NaN/Inf produced by a numeric primitive.
struct NumericError : Error {
    using Error::Error;
};

}  // namespace quadlab
