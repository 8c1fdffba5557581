#pragma once

#include <stdexcept>
#include <string>

namespace cab {

// Base class for everything thrown by the library. The CLI maps the
// subclasses onto exit codes, so new error kinds should extend one of
// the categories below rather than Error directly.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An argument lies outside the mathematical domain of an operation
// (coordinate outside [0,1], nonpositive curvature, probe radius that
// fits in neither direction, ...).
struct DomainError : Error {
    using Error::Error;
};

// The act/update handshake of a policy was violated.
struct ProtocolError : Error {
    using Error::Error;
};

// A numeric procedure failed: non-finite intermediate, slope fit with
// too few usable points, quadrature blow-up.
struct NumericError : Error {
    using Error::Error;
};

// Bad configuration file or command-line parameters.
struct ConfigError : Error {
    using Error::Error;
};

// Filesystem failure; message carries the offending path.
struct IoError : Error {
    using Error::Error;
};

}  // namespace cab
