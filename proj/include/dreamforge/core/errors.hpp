#pragma once

#include <stdexcept>
#include <string>

namespace df {

/// Shape or dimensionality violation in a tensor operation.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// NaN/Inf encountered where all values must be finite.
struct NonFiniteError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad magic bytes, version, or truncated payload in a binary file.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid run configuration (unknown key, bad type, out-of-range value).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input violates an operation precondition (bad prompt, mismatched
/// condition kind, missing checkpoint, ...).
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace df
