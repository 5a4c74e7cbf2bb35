#pragma once

#include <stdexcept>
#include <string>

namespace gruss {

/// Base class for every error raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeMismatch : Error {
    using Error::Error;
};

struct NotHermitian : Error {
    using Error::Error;
};

struct NotPositive : Error {
    using Error::Error;
};

struct NotUnit : Error {
    using Error::Error;
};

struct RadiusViolated : Error {
    using Error::Error;
};

struct BadIndex : Error {
    using Error::Error;
};

struct Singular : Error {
    using Error::Error;
};

struct CapExceeded : Error {
    using Error::Error;
};

struct UnknownInequality : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

struct VersionMismatch : Error {
    using Error::Error;
};

/// Raised on malformed instance or config files; carries a 1-based
/// position when the underlying parser provides one (0 otherwise).
struct ParseError : Error {
    ParseError(const std::string& what, int line_, int column_)
        : Error(what), line(line_), column(column_) {}
    int line = 0;
    int column = 0;
};

}  // namespace gruss
