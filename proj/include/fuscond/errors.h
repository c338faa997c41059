#pragma once

#include <stdexcept>
#include <string>

namespace fuscond {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: tensor shapes, index ranges, schema violations.
class StructuralError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Iteration caps, ambiguous eigenvalue clusters, failed integer rounding.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// The request exceeds a documented size limit.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// Input data contradicts an identity that holds for genuine categories.
class InconsistentData : public Error {
 public:
  using Error::Error;
};

class TheoremViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace fuscond
