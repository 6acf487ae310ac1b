#pragma once

#include <stdexcept>
#include <string>

namespace awx {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid mathematical input (division by zero, zero substitution image, ...).
struct DomainError : Error {
    using Error::Error;
};

// Matrix dimensions do not match the requested operation.
struct ShapeError : Error {
    using Error::Error;
};

// A coefficient function was evaluated at a pole.
struct EvaluationError : Error {
    using Error::Error;
};

// An extension spec violates one of its nonvanishing conditions.
struct GenericityError : Error {
    using Error::Error;
};

struct DegenerateParameterError : Error {
    using Error::Error;
};

struct SliceError : Error {
    using Error::Error;
};

struct NotInAlgebraError : Error {
    using Error::Error;
};

struct OrderBoundExceeded : Error {
    using Error::Error;
};

struct NumericalError : Error {
    using Error::Error;
};

// A structural promise of the library itself failed; indicates a bug.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace awx
