// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <limits>

#include "rcg/asymptotics.hpp"
#include "rcg/errors.hpp"

namespace rcg {

double lambert_w(double x) {
  if (std::isnan(x) || x < 0.0) throw InvalidArgument("lambert_w: x must be >= 0");
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return x;
  const double e = 2.718281828459045235360287;
  double w = x < e ? std::log1p(x) : std::log(x) - std::log(std::log(x));
  if (x > 1e250) {
    // w e^w would overflow; Newton on w + log w = log x.
    const double lx = std::log(x);
    for (int i = 0; i < 100; ++i) {
      const double dw = (w + std::log(w) - lx) / (1.0 + 1.0 / w);
      w -= dw;
      if (std::fabs(dw) <= 1e-16 * std::fabs(w)) break;
    }
    return w;
  }
  for (int i = 0; i < 100; ++i) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double wp1 = w + 1.0;
    const double dw = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    w -= dw;
    if (std::fabs(dw) <= 4.0 * std::numeric_limits<double>::epsilon() * std::fabs(w)) break;
  }
  return w;
}

}  // namespace rcg
