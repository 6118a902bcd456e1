#pragma once

#include <stdexcept>
#include <string>

namespace paraharm {

/// Raised when arguments violate an operation's mathematical preconditions
/// (mismatched algebras, zero inverses, out-of-range parameters).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A dual point does not lie in the orbit a witness was requested for.
class OrbitError : public DomainError {
 public:
  explicit OrbitError(const std::string& what) : DomainError(what) {}
};

/// The requested group, family or combination is not modeled.
class UnsupportedError : public std::invalid_argument {
 public:
  explicit UnsupportedError(const std::string& what) : std::invalid_argument(what) {}
};

/// Adaptive quadrature ran out of refinement budget.
class QuadratureError : public std::runtime_error {
 public:
  explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace paraharm
