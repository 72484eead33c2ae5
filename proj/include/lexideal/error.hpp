#ifndef LEXIDEAL_ERROR_HPP
#define LEXIDEAL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lexideal {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed textual/JSON input (scalars, points, documents).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Structurally well-formed input that violates a precondition
// (duplicate points, non-order-ideal sets, field mismatches, ...).
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// A guaranteed invariant failed while computing; indicates a bug rather
// than bad input, but is reported in a structured way instead of UB.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

} // namespace lexideal

#endif // LEXIDEAL_ERROR_HPP
