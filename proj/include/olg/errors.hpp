#pragma once

#include <stdexcept>
#include <string>

namespace olg {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An iterative routine or closed-form solve failed numerically.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The perfect-foresight price solve has 1 - gamma*B <= 0.
class StepSingular : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// The f'(P*) denominator is non-positive, so the f' > 0 regime cannot be certified.
class PreconditionViolated : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Scenario or parameter validation failure. `field` carries the JSON path,
/// e.g. "params.sigma".
class ValidationError : public std::invalid_argument {
public:
    ValidationError(std::string field, const std::string& message)
        : std::invalid_argument(field.empty() ? message : field + ": " + message),
          field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Parameters admit no full-employment steady state with positive savings base.
class InfeasibleCalibration : public ValidationError {
public:
    explicit InfeasibleCalibration(const std::string& message) : ValidationError("params", message) {}
};

}  // namespace olg
