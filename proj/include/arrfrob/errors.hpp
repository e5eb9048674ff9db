#pragma once

#include <stdexcept>
#include <string>

namespace arrfrob {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Dimension mismatch (non-square determinant, incompatible products, ...).
struct ShapeError : Error {
    using Error::Error;
};

/// Bad user-supplied value (out-of-range index, repeated tuple entry, ...).
struct InputError : Error {
    using Error::Error;
};

/// Singular matrix where an invertible one is required; carries a witness.
struct SingularMatrixError : Error {
    using Error::Error;
};

/// Parameter point on the discriminant; carries the vanishing form(s).
struct SingularityError : Error {
    using Error::Error;
};

/// Evaluation outside the domain of definition (pole, log of zero).
struct EvalError : Error {
    using Error::Error;
};

/// Operation requested in a mode it does not support (e.g. non-unit weights).
struct UnsupportedError : Error {
    using Error::Error;
};

/// Inadmissible numeric parameter (excluded twist values and the like).
struct ParameterError : Error {
    using Error::Error;
};

/// Numerical integration failed to converge or detected a divergence.
struct QuadratureError : Error {
    using Error::Error;
};

/// Malformed configuration; message includes the offending field.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace arrfrob
