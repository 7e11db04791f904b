#pragma once

#include <stdexcept>
#include <string>

namespace hexcensus {

// Input outside the mathematical domain of an operation (negative
// factorial argument, same-parity centered query, odd Pfaffian, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed arguments: wrong lengths, duplicate interpolation points.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A search or matrix size exceeded its configured budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A quantity that must be an integer count came out fractional.
// Never caught internally: it signals a defect in a formula.
class IntegralityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hexcensus
