// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rcg {

// Precondition or parameter violation.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A quantity left the representable floating-point range.
class CapacityError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Iterative solver gave up; carries the last bracket.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double lo, double hi)
      : std::runtime_error(what), lo_(lo), hi_(hi) {}
  double bracket_lo() const noexcept { return lo_; }
  double bracket_hi() const noexcept { return hi_; }

 private:
  double lo_;
  double hi_;
};

// Rejection sampler ran out of attempts.
class SamplingExhausted : public std::runtime_error {
 public:
  explicit SamplingExhausted(std::int64_t attempts)
      : std::runtime_error("rejection sampler exhausted after " +
                           std::to_string(attempts) + " attempts"),
        attempts_(attempts) {}
  std::int64_t attempts() const noexcept { return attempts_; }

 private:
  std::int64_t attempts_;
};

// Correlation between partitions is undefined (zero variance indicator).
class UndefinedCorrelation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace rcg
