#pragma once

#include <stdexcept>
#include <string>

namespace nashcurve {

// Domain errors: invalid input for an operation. CLI maps these to exit 1.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotCofinite : DomainError {
    using DomainError::DomainError;
};

struct ZeroPolynomial : DomainError {
    using DomainError::DomainError;
};

struct NonHomogeneous : DomainError {
    using DomainError::DomainError;
};

struct SingularSystem : DomainError {
    using DomainError::DomainError;
};

struct SimpleRequiresTwoFactors : DomainError {
    using DomainError::DomainError;
};

// Internal check errors: a theorem-level cross-check failed at runtime.
// These indicate a bug or a genuine gap and must be loud. CLI maps them to
// exit 2.
struct InternalCheckError : std::logic_error {
    using std::logic_error::logic_error;
};

struct CriterionMismatch : InternalCheckError {
    using InternalCheckError::InternalCheckError;
};

struct IdentityViolation : InternalCheckError {
    using InternalCheckError::InternalCheckError;
};

struct ConstructionFailed : InternalCheckError {
    using InternalCheckError::InternalCheckError;
};

} // namespace nashcurve
