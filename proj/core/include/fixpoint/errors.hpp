#pragma once

#include <stdexcept>
#include <string>

namespace fixpoint {

/// Malformed input: dimension mismatch, bad parameter range, missing selfmap.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A required hypothesis did not hold before a construction was attempted.
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(std::string hypothesis, const std::string& what)
        : std::runtime_error(what), hypothesis(std::move(hypothesis)) {}
    std::string hypothesis;
};

/// A user-supplied evaluator returned a negative or non-finite value.
struct GaugeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Rejection sampling exhausted its attempt budget.
struct GenerationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// JSON document does not match the instance schema; carries a JSON path.
struct ParseError : InputError {
    ParseError(std::string path, const std::string& what)
        : InputError(what + " (at " + path + ")"), path(std::move(path)) {}
    std::string path;
};

}  // namespace fixpoint
