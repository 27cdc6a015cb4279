#pragma once

#include <stdexcept>
#include <string>

namespace coce {

// Base for everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Shape/dimension disagreements (names both shapes in the message).
class DimensionError : public Error {
public:
    using Error::Error;
};

// A documented precondition of an operation was violated.
class ContractError : public Error {
public:
    using Error::Error;
};

// Invalid trigger specification or out-of-bounds placement.
class SpecError : public Error {
public:
    using Error::Error;
};

// Malformed external file (CIFAR batch, checkpoint, ...).
class FormatError : public Error {
public:
    using Error::Error;
};

// Checkpoint carries an unsupported format version.
class VersionError : public FormatError {
public:
    using FormatError::FormatError;
};

// Not enough qualifying examples to satisfy a curation request.
class CurationError : public Error {
public:
    using Error::Error;
};

// Degenerate evaluation input (single-class AUC, too few points, ...).
class EvalError : public Error {
public:
    using Error::Error;
};

// Bad run configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

// Training diverged; message carries the last finite state.
class TrainingError : public Error {
public:
    using Error::Error;
};

// A tensor operation produced NaN/Inf.
class NumericError : public Error {
public:
    using Error::Error;
};

// Filesystem trouble.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace coce
