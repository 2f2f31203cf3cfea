#pragma once

#include <stdexcept>
#include <string>

namespace kcones {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Two operands live in rings of different ambient dimension or rank.
struct DimensionError : Error {
    explicit DimensionError(const std::string& msg) : Error(msg) {}
};

// Division failed (zero divisor, pole, or inexact quotient where exactness is required).
struct DivisionError : Error {
    explicit DivisionError(const std::string& msg) : Error(msg) {}
};

// A reduced equivariant class came out with irreducibly fractional t-exponents.
struct FractionalExponentError : Error {
    explicit FractionalExponentError(const std::string& msg) : Error(msg) {}
};

// Malformed textual or JSON input.
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Invalid argument values (out-of-range indices, empty lists, bad descriptors).
struct InputError : Error {
    explicit InputError(const std::string& msg) : Error(msg) {}
};

// A configured resource cap was exceeded (e.g. monomial-ideal generator count).
struct ResourceLimitError : Error {
    explicit ResourceLimitError(const std::string& msg) : Error(msg) {}
};

} // namespace kcones
