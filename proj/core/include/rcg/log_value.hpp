// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace rcg {

// Nonnegative number stored as its natural logarithm; -inf encodes zero.
struct LogValue {
  double logval = -std::numeric_limits<double>::infinity();

  constexpr LogValue() = default;
  constexpr explicit LogValue(double lv) : logval(lv) {}

  static constexpr LogValue zero() { return LogValue(); }
  static constexpr LogValue one() { return LogValue(0.0); }
  static LogValue from_value(double x);

  double value() const { return std::exp(logval); }
  bool is_zero() const { return logval == -std::numeric_limits<double>::infinity(); }

  friend LogValue operator+(LogValue a, LogValue b);
  friend LogValue operator*(LogValue a, LogValue b) {
    if (a.is_zero() || b.is_zero()) return LogValue();
    return LogValue(a.logval + b.logval);
  }
  friend LogValue operator/(LogValue a, LogValue b);
  LogValue& operator+=(LogValue o) { return *this = *this + o; }
  LogValue& operator*=(LogValue o) { return *this = *this * o; }

  friend bool operator==(LogValue a, LogValue b) { return a.logval == b.logval; }
  friend bool operator<(LogValue a, LogValue b) { return a.logval < b.logval; }
};

// log(e^a + e^b) in max + log1p form.
double log_add(double a, double b);

// Streaming log-sum-exp: running maximum plus rescaled accumulator.
template <typename Real = double>
class LogSumExp {
 public:
  void add(Real x) {
    if (x == -std::numeric_limits<Real>::infinity()) return;
    if (x <= max_) {
      acc_ += std::exp(x - max_);
    } else {
      acc_ = acc_ * std::exp(max_ - x) + Real(1);
      max_ = x;
    }
  }
  Real result() const {
    if (acc_ == Real(0)) return -std::numeric_limits<Real>::infinity();
    return max_ + std::log(acc_);
  }

 private:
  Real max_ = -std::numeric_limits<Real>::infinity();
  Real acc_ = Real(0);
};

// log C(n, k); -inf outside 0 <= k <= n.
LogValue log_binomial(std::int64_t n, std::int64_t k);

// log n! in extended precision.
long double log_factorial(std::int64_t n);

}  // namespace rcg
