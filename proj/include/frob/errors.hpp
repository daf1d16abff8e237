#pragma once

#include <stdexcept>
#include <string>

namespace frob {

// Bad input: invalid tuple, negative target, lambda in {0,1}, ...
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A family's hypotheses do not hold; the message names the constraint.
class PreconditionError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Instance exceeds a configured bound (oracle cap, expansion degree, ...).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Search range too small to certify a result (e.g. m_cap in the O_B reduction).
class UnresolvedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Something that should be impossible: inexact division, uncancelled pole.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace frob
