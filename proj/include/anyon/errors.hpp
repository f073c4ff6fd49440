#pragma once

#include <stdexcept>
#include <string>

namespace anyon {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input data violates a structural axiom or precondition (CLI exit code 1).
struct ValidationError : Error {
    using Error::Error;
};

// A charge label is not part of the model (CLI exit code 1).
struct UnknownCharge : ValidationError {
    explicit UnknownCharge(const std::string& label)
        : ValidationError("unknown charge label: " + label) {}
};

// An operation requiring primitive charges was given a non-primitive one.
struct PrimitivityError : ValidationError {
    using ValidationError::ValidationError;
};

// Two states or models that must match do not.
struct ModelMismatch : ValidationError {
    using ValidationError::ValidationError;
};

// Sector structure of two spectra does not line up.
struct SectorMismatch : ValidationError {
    using ValidationError::ValidationError;
};

// The typical set carries no probability mass.
struct NoTypicalMass : ValidationError {
    using ValidationError::ValidationError;
};

// Iterative numerics failed to converge (CLI exit code 2).
struct NumericError : Error {
    using Error::Error;
};

// An enumeration would exceed the configured cap (CLI exit code 3).
struct SizeError : Error {
    using Error::Error;
};

} // namespace anyon
