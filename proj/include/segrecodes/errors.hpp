#pragma once

#include <stdexcept>
#include <string>

namespace segrecodes {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPrimePower : Error {
    using Error::Error;
};
struct UnsupportedField : Error {
    using Error::Error;
};
struct DivisionByZero : Error {
    using Error::Error;
};
struct ZeroVector : Error {
    using Error::Error;
};
struct FieldMismatch : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct DuplicatePoint : Error {
    using Error::Error;
};
struct BudgetExceeded : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};

} // namespace segrecodes
