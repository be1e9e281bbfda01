#pragma once

#include <stdexcept>
#include <string>

namespace kaehler {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands live in rings with different variable counts.
struct DimensionError : Error {
    using Error::Error;
};

struct ZeroDivisionError : Error {
    using Error::Error;
};

struct NotInvertibleError : Error {
    using Error::Error;
};

/// Input violates a constructor precondition (constant term, shape, range).
struct ValidationError : Error {
    using Error::Error;
};

/// A value claiming to satisfy structural invariants does not.
struct StructureError : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

}  // namespace kaehler
