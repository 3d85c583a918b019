#pragma once

#include <stdexcept>
#include <string>

namespace dnne {

// Argument/precondition violations (bad arity, shape mismatch, bad range).
class ArgumentError : public std::invalid_argument {
public:
    explicit ArgumentError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Enzyme dose implies a nicking probability above 1 (weight not representable).
class DoseOverflowError : public ArgumentError {
public:
    explicit DoseOverflowError(const std::string& msg) : ArgumentError(msg) {}
};

// Microfluidic protocol violated (occupied slot, unmixed cell, bad phase order).
class ProtocolError : public std::runtime_error {
public:
    explicit ProtocolError(const std::string& msg) : std::runtime_error(msg) {}
};

// Weight/threshold cannot be represented on the chemistry (scale undefined,
// rescaled threshold outside (0,1)).
class QuantizationError : public std::runtime_error {
public:
    explicit QuantizationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed file contents (bad magic, bad header, unparseable record).
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

// Mutually inconsistent inputs (image/label count mismatch).
class ConsistencyError : public std::runtime_error {
public:
    explicit ConsistencyError(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem-level failure (missing file, truncated read).
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Experiment configuration rejected; message carries the offending field path.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace dnne
