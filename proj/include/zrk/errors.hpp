#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zrk {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A cell lies outside the m x n grid, or an index is out of range.
struct RangeError : Error {
    using Error::Error;
};

/// A 3-edge repeats a row or a column.
struct DegenerateEdgeError : Error {
    using Error::Error;
};

/// Malformed edge (repeated cell inside one edge).
struct EdgeError : Error {
    using Error::Error;
};

/// Some cell belongs to more than one edge.
struct SimplicityError : Error {
    using Error::Error;
};

struct EdgeNotInGraphError : Error {
    using Error::Error;
};

/// Dimension guard exceeded (canonical codes, searches).
struct GuardError : Error {
    using Error::Error;
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

/// A decomposition does not expand to the form it is claimed to represent.
struct ExpansionMismatchError : Error {
    using Error::Error;
};

/// Malformed input; position is a byte offset when known.
struct ParseError : Error {
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    explicit ParseError(const std::string& what, std::size_t pos = npos) : Error(what), position(pos) {}

    std::size_t position;
};

}  // namespace zrk
