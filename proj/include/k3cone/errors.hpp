#pragma once

#include <stdexcept>
#include <string>

namespace k3cone {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shape of an input does not fit (vector length, matrix size, ambient dim).
struct DimensionError : Error {
    using Error::Error;
};

// Nonsingularity was required but the matrix is singular.
struct SingularError : Error {
    using Error::Error;
};

// A mathematical precondition other than shape failed (degenerate form,
// non-isometry, non-unimodular generator, ...).
struct DomainError : Error {
    using Error::Error;
};

// Bad text input; `pos` is a 0-based offset into the source string.
struct ParseError : Error {
    std::size_t pos;
    ParseError(const std::string& what, std::size_t pos_) : Error(what), pos(pos_) {}
};

// Scenario/ring file does not match the schema; `path` is a field path
// like "n1.curves[2].pairing".
struct SchemaError : Error {
    std::string path;
    SchemaError(const std::string& what, std::string path_) : Error(what), path(std::move(path_)) {}
};

} // namespace k3cone
