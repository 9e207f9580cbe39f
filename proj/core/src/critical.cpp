// SPDX-License-Identifier: Apache-2.0
#include "rcg/critical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rcg/errors.hpp"
#include "rcg/exactdist.hpp"

namespace rcg {

namespace {

struct Eval {
  double f;
  double fp;
};

bool collapsed(double lo, double hi) {
  const double scale = std::max({std::fabs(lo), std::fabs(hi), 1e-300});
  return hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * scale;
}

}  // namespace

CriticalResult solve_critical(std::int64_t n, double q, double tol) {
  if (n < 2) throw InvalidArgument("solve_critical: n must be >= 2");
  if (!(q > 0.0 && q < 1.0)) throw InvalidArgument("solve_critical: q must lie in (0, 1)");
  const double N = choose2(n);
  const double lq = std::log(q);

  // f(t) = C(n,2) t - log B_n(e^t) - log q is increasing and concave.
  auto eval = [&](double t) {
    const BellTable table = build_bell_table(n, EdgeBias::from_t(t));
    return Eval{N * t - table.log_b(n) - lq, N - expected_edges(table, n)};
  };

  CriticalResult res;
  res.n = n;
  res.q = q;
  const double log_bell_one = build_bell_table(n, EdgeBias::from_t(0.0)).log_b(n);
  double t = (log_bell_one + lq) / N;
  Eval e = eval(t);
  int evals = 1;

  double lo;
  double hi;
  if (e.f <= 0.0) {
    lo = t;
    double step = std::max(static_cast<double>(log_factorial(n)) / N + 1.0 - t, 1.0);
    hi = t + step;
    while (eval(hi).f <= 0.0) {
      step *= 2.0;
      hi = t + step;
      if (++evals > kCriticalMaxIterations) throw ConvergenceError("solve_critical: no upper bracket", lo, hi);
    }
  } else {
    hi = t;
    // log B_n >= 0 gives f(t) <= C(n,2) t - log q < 0 here.
    lo = lq / N - 1.0;
  }

  for (int it = 1; it <= kCriticalMaxIterations; ++it) {
    if (e.f < 0.0) lo = std::max(lo, t);
    if (e.f > 0.0) hi = std::min(hi, t);
    if (std::fabs(e.f) < tol || collapsed(lo, hi)) {
      res.t_star = t;
      res.p_star = p_of_t(t);
      res.iterations = it - 1;
      res.residual = std::fabs(e.f);
      return res;
    }
    double next = t - e.f / e.fp;
    if (!(next > lo && next < hi) || !std::isfinite(next)) next = 0.5 * (lo + hi);
    t = next;
    e = eval(t);
  }
  throw ConvergenceError("solve_critical: no convergence within " +
                             std::to_string(kCriticalMaxIterations) + " iterations",
                         lo, hi);
}

std::pair<double, double> critical_bounds(std::int64_t n) {
  if (n < 3) throw InvalidArgument("critical_bounds: n must be >= 3");
  const double ln = std::log(static_cast<double>(n));
  const double nd = static_cast<double>(n);
  return {p_of_t(2.0 * (ln - std::log(ln) - 1.0) / nd), p_of_t(2.0 * (ln - 1.0) / nd)};
}

double solve_t_prime(std::int64_t n, double tol) {
  if (n < 2) throw InvalidArgument("solve_t_prime: n must be >= 2");
  const double lfact = static_cast<double>(log_factorial(n));
  auto g = [&](double t) { return build_bell_table(n, EdgeBias::from_t(t)).log_b(n) - lfact; };
  double lo = 0.0;
  double hi = lfact / choose2(n);
  const double glo = g(lo);
  if (std::fabs(glo) < tol) return lo;
  const double ghi = g(hi);
  if (std::fabs(ghi) < tol) return hi;
  for (int it = 0; it < kCriticalMaxIterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    if (std::fabs(gm) < tol || collapsed(lo, hi)) return mid;
    if (gm < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  throw ConvergenceError("solve_t_prime: bisection did not converge", lo, hi);
}

}  // namespace rcg
