#pragma once

#include <stdexcept>
#include <string>

namespace quermass {

/// Parameter outside the range an operation is defined on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input is (numerically) lower-dimensional than required.
class DegenerateInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The representation or dimension is outside what the exact algorithms handle.
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnboundednessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejection sampling acceptance fell below the usable floor.
class EfficiencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FitConditioningError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace quermass
