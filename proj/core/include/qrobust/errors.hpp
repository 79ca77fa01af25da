#pragma once

#include <stdexcept>
#include <string>

namespace qrob {

/// Bad experiment configuration (unknown keys, inconsistent fields). CLI exit code 1.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Missing or malformed data files, impossible preprocessing. CLI exit code 2.
struct DataError : std::runtime_error {
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numeric failure at runtime (NaN loss, degenerate renormalization). CLI exit code 3.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace qrob
