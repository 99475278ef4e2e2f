#pragma once

#include <stdexcept>
#include <string>

namespace rieffel {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Structured input (grid, group table, representation, file) failed validation.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Iterative or adaptive procedure did not reach its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A sesquilinear form that should be positive semi-definite has a negative direction.
class NotPositiveError : public std::runtime_error {
public:
    NotPositiveError(const std::string& what, double eigenvalue)
        : std::runtime_error(what), eigenvalue_(eigenvalue) {}
    double eigenvalue() const noexcept { return eigenvalue_; }

private:
    double eigenvalue_;
};

}  // namespace rieffel
