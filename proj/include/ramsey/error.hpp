#pragma once

#include <stdexcept>
#include <string>

namespace ramsey {

// Caller broke a documented precondition (size mismatch, empty set, p outside [0,1], ...).
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input is valid but larger than a brute-force routine supports.
class UnsupportedSize : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Argument lies outside the domain where a closed form is valid.
class OutOfDomain : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A fit or estimate has too few usable data points.
class InsufficientData : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Every trial of a batch ended Unknown; no estimate can be formed.
class DegenerateEstimate : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A result failed its own verification. Indicates a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed graph / colouring files.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool cond, const std::string& what) {
  if (!cond) throw ContractViolation(what);
}

}  // namespace detail
}  // namespace ramsey
