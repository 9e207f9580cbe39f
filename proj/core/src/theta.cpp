// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <complex>
#include <string>

#include "rcg/asymptotics.hpp"
#include "rcg/errors.hpp"

namespace rcg {

namespace {

using cld = std::complex<long double>;

constexpr long double kPi = 3.141592653589793238462643383279502884L;
constexpr long double kTail = 1e-18L;

void check_w(double w, const char* what) {
  if (!(w > 0.0 && w < 1.0)) throw InvalidArgument(std::string(what) + ": w must lie in (0, 1)");
}

long double ipow(long double x, int k) {
  long double r = 1.0L;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

cld e_direct(long double w, long double tau, long double theta, int ell) {
  const long double L = -std::log(w);
  const long double peak = std::sqrt(static_cast<long double>(ell) / L);
  const long double jc = std::nearbyint(tau);
  cld sum = 0.0L;
  long double abs_sum = 0.0L;
  auto add = [&](long double j) {
    const long double t = j - tau;
    const long double mag = ipow(t, ell) * std::exp(-0.5L * L * t * t);
    sum += mag * cld(std::cos(t * theta), std::sin(t * theta));
    abs_sum += std::fabs(mag);
    return std::fabs(mag);
  };
  add(jc);
  for (int dir : {1, -1}) {
    for (long double j = jc + dir;; j += dir) {
      const long double mag = add(j);
      if (std::fabs(j - tau) > peak && mag <= kTail * abs_sum) break;
    }
  }
  return sum;
}

// Poisson summation: each Fourier mode carries the Gaussian moments
// sum_j C(l,2j) (2j)!/(2^j j!) (i x)^{l-2j}, x = (2 pi s + theta)/sqrt(L).
cld e_fourier(long double w, long double tau, long double theta, int ell) {
  const long double L = -std::log(w);
  const long double sqL = std::sqrt(L);
  const long double pref = std::sqrt(2.0L * kPi / ipow(L, ell + 1));
  auto mode = [&](long double s, long double& weight) {
    const long double u = 2.0L * kPi * s + theta;
    const long double g = std::exp(-u * u / (2.0L * L));
    const long double x = u / sqL;
    cld inner = 0.0L;
    long double binom = 1.0L;     // C(l, 2j)
    long double gauss = 1.0L;     // (2j)! / (2^j j!)
    for (int j = 0; 2 * j <= ell; ++j) {
      if (j > 0) {
        binom *= static_cast<long double>((ell - 2 * j + 2) * (ell - 2 * j + 1)) /
                 static_cast<long double>((2 * j) * (2 * j - 1));
        gauss *= static_cast<long double>(2 * j - 1);
      }
      inner += binom * gauss * std::pow(cld(0.0L, x), ell - 2 * j);
    }
    weight = g * std::max(1.0L, ipow(std::fabs(x), ell));
    const long double phase = 2.0L * kPi * s * tau;
    return g * inner * cld(std::cos(phase), std::sin(phase));
  };
  long double weight = 0.0L;
  cld sum = mode(0.0L, weight);
  for (long double s = 1.0L;; s += 1.0L) {
    long double wp = 0.0L;
    long double wm = 0.0L;
    sum += mode(s, wp);
    sum += mode(-s, wm);
    if (wp < kTail && wm < kTail) break;
  }
  return pref * sum;
}

}  // namespace

std::complex<double> e_w_ell(const ThetaParams& params, ThetaMethod method) {
  check_w(params.w, "e_w_ell");
  if (params.ell < 0) throw InvalidArgument("e_w_ell: ell must be >= 0");
  const cld v = method == ThetaMethod::direct
                    ? e_direct(params.w, params.tau, params.theta, params.ell)
                    : e_fourier(params.w, params.tau, params.theta, params.ell);
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

std::complex<double> E_w_r(double w, int r, double tau, double theta) {
  check_w(w, "E_w_r");
  if (!(tau > 0.0)) throw InvalidArgument("E_w_r: tau must be positive");
  if (r < 0) throw InvalidArgument("E_w_r: r must be >= 0");
  const long double L = -std::log(static_cast<long double>(w));
  const long double T = tau;
  const long double base = 0.5L * std::log(2.0L * kPi * T) - T;
  auto log_mag = [&](long double k) {
    const long double d = k - T;
    return static_cast<long double>(r) * std::log(k / T) - 0.5L * L * d * d + k * std::log(T) -
           std::lgamma(k + 1.0L) + base;
  };
  cld sum = 0.0L;
  long double abs_sum = 0.0L;
  auto add = [&](long double k) {
    const long double mag = std::exp(log_mag(k));
    const long double ph = (k - T) * static_cast<long double>(theta);
    sum += mag * cld(std::cos(ph), std::sin(ph));
    abs_sum += mag;
    return mag;
  };
  const long double k0 = std::max(1.0L, std::nearbyint(T));
  add(k0);
  long double prev = abs_sum;
  for (long double k = k0 + 1.0L;; k += 1.0L) {
    const long double mag = add(k);
    if (mag <= prev && mag <= kTail * abs_sum) break;
    prev = mag;
  }
  prev = abs_sum;
  for (long double k = k0 - 1.0L; k >= 1.0L; k -= 1.0L) {
    const long double mag = add(k);
    if (mag <= prev && mag <= kTail * abs_sum) break;
    prev = mag;
  }
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

double expansion_coefficient(int k, int ell, double r) {
  if (k < 0 || k > 2 || ell < 0 || ell > 2 * k) return 0.0;
  switch (k) {
    case 0:
      return 1.0;
    case 1: {
      const double a[] = {-1.0 / 12.0, r - 0.5, -0.5};
      return a[ell];
    }
    default: {
      const double a[] = {1.0 / 288.0, 1.0 / 8.0 - r / 12.0, r * r / 2.0 - r + 5.0 / 12.0,
                          5.0 / 12.0 - r / 2.0, 1.0 / 8.0};
      return a[ell];
    }
  }
}

std::complex<double> E_w_r_expansion(double w, int r, double tau, double theta, int K) {
  check_w(w, "E_w_r_expansion");
  if (K < 0 || K > 3) throw InvalidArgument("E_w_r_expansion: K must lie in 0..3");
  std::complex<double> sum = 0.0;
  double scale = 1.0;
  for (int k = 0; k < K; ++k) {
    for (int ell = 0; ell <= 2 * k; ++ell) {
      sum += scale * expansion_coefficient(k, ell, r) *
             e_w_ell({w, tau, theta, ell}, ThetaMethod::direct);
    }
    scale /= tau;
  }
  return sum;
}

}  // namespace rcg
