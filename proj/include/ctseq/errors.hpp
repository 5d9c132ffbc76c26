#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ctseq {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (expression, number, spec string, scheme file).
struct ParseError : Error {
    std::size_t pos;
    ParseError(const std::string& msg, std::size_t pos_)
        : Error(msg + " (at position " + std::to_string(pos_) + ")"), pos(pos_) {}
    explicit ParseError(const std::string& msg) : Error(msg), pos(0) {}
};

/// A stated precondition was violated (composite p, non-coprime moduli, ...).
struct PreconditionError : Error {
    using Error::Error;
};

/// Operands live under different moduli or arities.
struct IncompatibilityError : Error {
    using Error::Error;
};

/// Unknown builtin sequence name.
struct CatalogError : Error {
    using Error::Error;
};

/// Binomial-sum spec outside the supported domain.
struct UnsupportedSpecError : Error {
    using Error::Error;
};

/// lambda_divide applied to a polynomial that is not p-power-supported.
struct NotPSupportedError : Error {
    using Error::Error;
};

/// Filesystem-level failure while saving or loading a scheme.
struct IoError : Error {
    using Error::Error;
};

/// Scheme file carries a format version this build does not understand.
struct VersionError : Error {
    using Error::Error;
};

/// Generation stopped because the state count would exceed the cap.
/// This is an expected outcome, not an exception.
struct CapExceeded {
    std::size_t reached;
};

} // namespace ctseq
