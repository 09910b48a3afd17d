#pragma once

#include <stdexcept>
#include <string>

namespace ramsey {

// Bad argument values (unknown family, out-of-range parameter, shape mismatch).
struct ParameterError : std::invalid_argument {
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// Instance is too large for exhaustive treatment under the configured caps.
struct InfeasibleError : std::runtime_error {
    explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed certificate file.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Certificate loaded cleanly but failed re-verification.
struct VerificationError : std::runtime_error {
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ramsey
