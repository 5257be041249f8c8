#ifndef RINGLAB_ERRORS_HPP
#define RINGLAB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ringlab {

/// Base class for every error raised by the library.
struct RinglabError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAUnit : RinglabError {
    using RinglabError::RinglabError;
};

struct NotAnIdeal : RinglabError {
    using RinglabError::RinglabError;
};

struct NotIdempotent : RinglabError {
    using RinglabError::RinglabError;
};

struct NotCentral : RinglabError {
    using RinglabError::RinglabError;
};

struct NotPrime : RinglabError {
    using RinglabError::RinglabError;
};

struct NotAnEndomorphism : RinglabError {
    using RinglabError::RinglabError;
};

struct InvalidBimodule : RinglabError {
    using RinglabError::RinglabError;
};

struct NotAGroupRing : RinglabError {
    using RinglabError::RinglabError;
};

struct UnknownGroup : RinglabError {
    using RinglabError::RinglabError;
};

struct UnknownPredicate : RinglabError {
    using RinglabError::RinglabError;
};

struct UnknownTheorem : RinglabError {
    using RinglabError::RinglabError;
};

/// A construction would produce a ring larger than the configured order cap.
struct BudgetExceeded : RinglabError {
    using RinglabError::RinglabError;
};

/// Syntax error in the construction language. Positions are 1-based.
struct ParseError : RinglabError {
    ParseError(std::string message, std::size_t line, std::size_t column)
        : RinglabError(std::move(message)), line(line), column(column) {}
    std::size_t line = 0;
    std::size_t column = 0;
};

/// Wrong number or shape of arguments for a construction node.
struct ArityError : ParseError {
    using ParseError::ParseError;
};

/// Argument outside the allowed range for a construction node.
struct RangeError : ParseError {
    using ParseError::ParseError;
};

}  // namespace ringlab

#endif
