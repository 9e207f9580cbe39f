// SPDX-License-Identifier: Apache-2.0
#include "rcg/log_value.hpp"

#include <algorithm>
#include <cmath>

#include "rcg/errors.hpp"

namespace rcg {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Stirling series remainder of log x! beyond x log x - x + log(2 pi x)/2.
long double stirling_tail(long double x) {
  const long double x2 = x * x;
  return (1.0L / 12.0L - (1.0L / 360.0L - (1.0L / 1260.0L - 1.0L / (1680.0L * x2)) / x2) / x2) / x;
}

}  // namespace

LogValue LogValue::from_value(double x) {
  if (x < 0.0) throw InvalidArgument("LogValue::from_value: negative value");
  return LogValue(x == 0.0 ? kNegInf : std::log(x));
}

double log_add(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double hi = std::max(a, b);
  const double lo = std::min(a, b);
  return hi + std::log1p(std::exp(lo - hi));
}

LogValue operator+(LogValue a, LogValue b) { return LogValue(log_add(a.logval, b.logval)); }

LogValue operator/(LogValue a, LogValue b) {
  if (b.is_zero()) throw InvalidArgument("LogValue division by zero");
  if (a.is_zero()) return LogValue();
  return LogValue(a.logval - b.logval);
}

long double log_factorial(std::int64_t n) {
  if (n < 0) throw InvalidArgument("log_factorial: negative argument");
  return std::lgamma(static_cast<long double>(n) + 1.0L);
}

LogValue log_binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw InvalidArgument("log_binomial: negative n");
  if (k < 0 || k > n) return LogValue();
  const std::int64_t j = std::min(k, n - k);
  if (j == 0) return LogValue(0.0);
  if (j <= 30) {
    long double acc = 0.0L;
    for (std::int64_t i = 1; i <= j; ++i) {
      acc += std::log(static_cast<long double>(n - j + i) / static_cast<long double>(i));
    }
    return LogValue(static_cast<double>(acc));
  }
  // a log(N/a) + b log(N/b) + log(N/(2 pi a b))/2 + tail(N) - tail(a) - tail(b)
  const long double N = static_cast<long double>(n);
  const long double a = static_cast<long double>(j);
  const long double b = N - a;
  const long double ratio = a / N;
  long double v = -a * std::log(ratio) - b * std::log1p(-ratio);
  v += 0.5L * std::log(N / (2.0L * 3.14159265358979323846264338327950288L * a * b));
  v += stirling_tail(N) - stirling_tail(a) - stirling_tail(b);
  return LogValue(static_cast<double>(v));
}

}  // namespace rcg
