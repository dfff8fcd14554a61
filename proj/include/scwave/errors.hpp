#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace scwave {

/// Thrown when an input object violates a structural precondition.
/// Carries the name of the offending field so callers (CLI, JSON loader)
/// can point at the exact knob that needs fixing.
class ValidationError : public std::invalid_argument {
public:
    ValidationError(std::string field, const std::string& message)
        : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Thrown when a numerically valid object is used outside its domain
/// (e.g. a pattern rank beyond the addressable range).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Thrown by the receive path when a demodulated activation pattern cannot
/// correspond to any transmitted one (possible only under channel noise).
class DetectionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown on file read/write failures in the report and scenario loaders.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace scwave
