#ifndef PCST_ERRORS_HPP
#define PCST_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pcst {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid parameter or value outside the documented domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A tree/solution object violates its structural invariants
/// (disconnected, cyclic, foreign edges, missing endpoints).
class StructuralError : public Error {
public:
    using Error::Error;
};

/// An operation requiring a connected graph received a disconnected one.
class ConnectivityError : public Error {
public:
    using Error::Error;
};

/// Malformed instance or solution file. Carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

}  // namespace pcst

#endif
