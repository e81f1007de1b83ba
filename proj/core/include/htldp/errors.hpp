#pragma once

#include <stdexcept>
#include <string>

namespace htldp {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed or inconsistent configuration / input data.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A parameter combination that no closed form covers.
class UnsupportedConfiguration : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a quantity cannot be estimated from the available data.
class NotEstimable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace htldp
