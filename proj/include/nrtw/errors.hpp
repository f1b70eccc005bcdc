#pragma once

#include <stdexcept>
#include <string>

namespace nrtw {

// Unrecoverable evaluation failures are reported with exceptions.  Each type
// names the contract that was violated so CLI and tests can map them to the
// right exit code / assertion.

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// parameter c of 2F1 (or another series parameter) sits on a pole
struct PoleParameterError : DomainError {
    using DomainError::DomainError;
};

// argument landed on a pole of the function itself
struct PoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BracketError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroMassError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonIntegrableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnknownFamilyError : ValidationError {
    using ValidationError::ValidationError;
};

struct UnknownRelationError : ValidationError {
    using ValidationError::ValidationError;
};

struct UnsupportedPairError : ValidationError {
    using ValidationError::ValidationError;
};

} // namespace nrtw
