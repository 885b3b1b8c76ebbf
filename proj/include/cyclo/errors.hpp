#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cyclo {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Polynomial / series arithmetic.
struct ZeroDivisor : Error {
    using Error::Error;
};
struct NonExactDivision : Error {
    using Error::Error;
};
struct EmptyInput : Error {
    using Error::Error;
};
struct NonUnitConstantTerm : Error {
    using Error::Error;
};
struct OrderMismatch : Error {
    using Error::Error;
};

// Cyclotomic factorization and exponent sequences.
struct ZeroInput : Error {
    using Error::Error;
};
struct NonUnitAtZero : Error {
    using Error::Error;
};
struct ConstantTermNotOne : Error {
    using Error::Error;
};

// Numerical semigroups.
struct GcdNotOne : Error {
    using Error::Error;
};
struct NotCoprime : Error {
    using Error::Error;
};

// Hilbert series.
struct TooManyRelations : Error {
    using Error::Error;
};
struct NotStandardGraded : Error {
    using Error::Error;
};
struct DimensionTooSmall : Error {
    using Error::Error;
};
struct FitDidNotStabilize : Error {
    using Error::Error;
};

/// Raised by the text parsers; `position` is the 0-based character offset
/// of the offending token within the input string.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position(position) {}
    std::size_t position;
};

/// Raised when a record file contains an unparsable line.
struct MalformedRecord : Error {
    MalformedRecord(const std::string& what, std::size_t line)
        : Error(what + " on line " + std::to_string(line)), line(line) {}
    std::size_t line;
};

}  // namespace cyclo
