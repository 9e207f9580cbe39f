// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <utility>

#include "rcg/bell.hpp"

namespace rcg {

struct CriticalResult {
  std::int64_t n = 0;
  double q = 0.0;
  double t_star = 0.0;
  double p_star = 0.0;
  int iterations = 0;
  double residual = 0.0;
};

inline constexpr int kCriticalMaxIterations = 200;

// Solves P(C_{n,p(t)} = 1) = q, i.e. C(n,2) t - log B_n(e^t) - log q = 0, by
// Newton steps with derivative C(n,2) - E[M_{n,p(t)}] inside a maintained
// bracket, bisecting whenever a step leaves it. Throws ConvergenceError after
// kCriticalMaxIterations.
CriticalResult solve_critical(std::int64_t n, double q, double tol = 1e-11);

// (p_L, p_U) = (p(2(log n - log log n - 1)/n), p(2(log n - 1)/n)); n >= 3.
std::pair<double, double> critical_bounds(std::int64_t n);

// Root of log B_n(e^t) = log n! by bisection on [0, log n!/C(n,2)].
double solve_t_prime(std::int64_t n, double tol = 1e-10);

}  // namespace rcg
