#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace riskman {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad argument values: empty term value, malformed IRI, index out of range.
struct ValueError : Error {
    using Error::Error;
};

// Lexical or grammatical failure in any of the text formats.
// Positions are 1-based; column 0 means "unknown".
struct ParseError : Error {
    ParseError(std::string message, std::size_t line, std::size_t column = 0)
        : Error(format(message, line, column)), line(line), column(column) {}

    std::size_t line;
    std::size_t column;

private:
    static std::string format(const std::string& message, std::size_t line, std::size_t column) {
        std::string out = "syntax error at line " + std::to_string(line);
        if (column > 0) out += ", column " + std::to_string(column);
        return out + ": " + message;
    }
};

// Turtle/RDFa feature that is deliberately outside the supported subset.
struct UnsupportedConstructError : ParseError {
    using ParseError::ParseError;
};

// Prefixed name whose prefix is not declared, or a role/class name that is
// not part of the active vocabulary.
struct UnknownNameError : Error {
    using Error::Error;
};

// Vocabulary misuse in a submission: a class name used as a predicate or a
// role name used as a type. Signals a malformed submission, hence an error
// rather than a leftover triple.
struct TypeMisuseError : Error {
    using Error::Error;
};

// Declared subclass hierarchy contains a cycle.
struct CyclicHierarchyError : Error {
    using Error::Error;
};

// Saturation exceeded the configured assertion or wall-clock budget.
struct ResourceLimitError : Error {
    using Error::Error;
};

// Write attempted on a frozen graph.
struct FrozenGraphError : Error {
    using Error::Error;
};

} // namespace riskman
