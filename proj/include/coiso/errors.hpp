#pragma once

#include <stdexcept>
#include <string>

namespace coiso {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Jacobian rank at a sampled point is below the expected codimension.
class SingularPoint : public Error {
 public:
  using Error::Error;
};

class InvalidModule : public Error {
 public:
  using Error::Error;
};

class NoGradedTriple : public Error {
 public:
  using Error::Error;
};

/// A linear system that was required to be solvable is not.
class Inconsistent : public Error {
 public:
  using Error::Error;
};

/// Point-count dimension estimates disagree across primes.
class Inconclusive : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

class NonIntegralDefect : public Error {
 public:
  using Error::Error;
};

/// Input data fails one of the structural invariants of its type.
/// `invariant()` names the check that failed.
class InvariantViolation : public Error {
 public:
  InvariantViolation(std::string invariant, const std::string& detail)
      : Error("invariant '" + invariant + "' violated: " + detail),
        invariant_(std::move(invariant)) {}

  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

}  // namespace coiso
