#pragma once

#include <stdexcept>

namespace fdb {

// Base class of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad argument values (n out of range, non-refinement, ...).
struct DomainError : Error {
    using Error::Error;
};

// Attempt to mix generator families (a with delta) in one polynomial.
struct FamilyMismatchError : Error {
    using Error::Error;
};

// Series or N-series of different truncation orders / shapes.
struct OrderMismatchError : Error {
    using Error::Error;
};

// Reversion of a series whose leading coefficient is not 1.
struct NotUnitalError : Error {
    using Error::Error;
};

// Enumeration size cap exceeded.
struct ResourceLimitError : Error {
    using Error::Error;
};

// Malformed external input (JSON, rational strings).
struct ParseError : Error {
    using Error::Error;
};

} // namespace fdb
