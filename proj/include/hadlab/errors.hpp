#pragma once

#include <stdexcept>
#include <string>

namespace hadlab {

// Base class for violations of mathematical preconditions (as opposed to
// usage/parse errors, which surface as std::invalid_argument or similar).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotHadamard : DomainError {
    using DomainError::DomainError;
};

struct NotNormalized : DomainError {
    using DomainError::DomainError;
};

struct RelationViolation : DomainError {
    using DomainError::DomainError;
};

struct ImplicitViolation : DomainError {
    using DomainError::DomainError;
};

struct NotUnbiased : DomainError {
    using DomainError::DomainError;
};

struct NonOrthogonalRows : DomainError {
    using DomainError::DomainError;
};

struct PatternMissing : DomainError {
    using DomainError::DomainError;
};

} // namespace hadlab
