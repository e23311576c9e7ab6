#pragma once

#include <stdexcept>
#include <string>

namespace mirrorlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// series-core
struct DivisionByNonUnit : Error { using Error::Error; };
struct BadConstantTerm : Error { using Error::Error; };
struct NonNilpotentInner : Error { using Error::Error; };
struct NotReversible : Error { using Error::Error; };

// dwork
struct BadPrime : Error { using Error::Error; };
struct NotFound : Error { using Error::Error; };
struct FormViolation : Error { using Error::Error; };

// classify / modular-type
struct NotTriangle : Error { using Error::Error; };
struct IncompleteOrbit : Error { using Error::Error; };

// input handling
struct ParseError : Error { using Error::Error; };

} // namespace mirrorlab
