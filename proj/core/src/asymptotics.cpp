// SPDX-License-Identifier: Apache-2.0
#include "rcg/asymptotics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "rcg/bell.hpp"
#include "rcg/errors.hpp"
#include "rcg/exactdist.hpp"

namespace rcg {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

std::vector<std::int64_t> poly_mul(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

std::vector<std::int64_t> poly_sub(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return a;
}

void check_subcritical(double w, std::int64_t n, const char* what) {
  if (!(w > 0.0 && w < 1.0)) throw InvalidArgument(std::string(what) + ": w must lie in (0, 1)");
  if (n < 2) throw InvalidArgument(std::string(what) + ": n must be >= 2");
}

// Weights nu_k = w^{C(k,2)} e^{gamma k} / k! for k >= 1, scaled by e^{-shift}.
struct SaddleSeries {
  std::vector<long double> k;
  std::vector<long double> nu;
  long double shift = 0.0L;

  SaddleSeries(double w, double gamma) {
    const long double t = std::log(static_cast<long double>(w));
    const long double g = gamma;
    std::vector<long double> logs;
    long double best = -std::numeric_limits<long double>::infinity();
    for (long double kk = 1.0L;; kk += 1.0L) {
      const long double l = t * kk * (kk - 1.0L) * 0.5L + g * kk - std::lgamma(kk + 1.0L);
      logs.push_back(l);
      best = std::max(best, l);
      // Past the log-concave peak the terms fall faster than geometrically.
      if (logs.size() >= 2 && l < best - 48.0L && l < logs[logs.size() - 2]) break;
      if (kk > 1e7L) throw CapacityError("saddle series: too many terms");
    }
    shift = best;
    for (std::size_t i = 0; i < logs.size(); ++i) {
      k.push_back(static_cast<long double>(i + 1));
      nu.push_back(std::exp(logs[i] - best));
    }
  }

  // sum k^r nu_k, without the e^{shift} factor.
  long double raw(int r) const {
    long double s = 0.0L;
    for (std::size_t i = 0; i < k.size(); ++i) s += std::pow(k[i], r) * nu[i];
    return s;
  }

  // Variance of k under weights proportional to k^r nu_k.
  long double tilted_variance(int r) const {
    const long double z = raw(r);
    const long double mu = raw(r + 1) / z;
    long double v = 0.0L;
    for (std::size_t i = 0; i < k.size(); ++i) {
      const long double d = k[i] - mu;
      v += std::pow(k[i], r) * nu[i] * d * d;
    }
    return v / z;
  }

  long double C(int r) const { return std::exp(shift) * raw(r); }
};

struct ThetaTriple {
  double e0;
  double e1;
  double e2;
};

ThetaTriple theta_triple(double w, double tau) {
  return {e_w_ell({w, tau, 0.0, 0}, ThetaMethod::direct).real(),
          e_w_ell({w, tau, 0.0, 1}, ThetaMethod::direct).real(),
          e_w_ell({w, tau, 0.0, 2}, ThetaMethod::direct).real()};
}

double discrete_gaussian_variance(const ThetaTriple& e) {
  return (e.e0 * e.e2 - e.e1 * e.e1) / (e.e0 * e.e0);
}

}  // namespace

std::vector<std::int64_t> cr_polynomial(int r) {
  if (r < 1 || r > 20) throw InvalidArgument("cr_polynomial: r must lie in 1..20");
  std::vector<std::int64_t> p{0, 1};
  for (int i = 1; i < r; ++i) {
    std::vector<std::int64_t> next(p.size() + 1, 0);
    for (std::size_t j = 0; j < p.size(); ++j) {
      next[j + 1] += p[j];                                     // z P
      if (j > 0) next[j] += static_cast<std::int64_t>(j) * p[j];  // z P'
    }
    p = std::move(next);
  }
  return p;
}

double eval_polynomial(const std::vector<std::int64_t>& coeffs, double z) {
  double v = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 0;) v = v * z + static_cast<double>(coeffs[i]);
  return v;
}

double c_r(std::int64_t n, int r) {
  if (n < 1) throw InvalidArgument("c_r: n must be >= 1");
  if (r < 0 || r > 8) throw InvalidArgument("c_r: r must lie in 0..8");
  const double W = lambert_w(static_cast<double>(n));
  if (r == 0) return std::expm1(W);
  if (r == 1) return W * std::exp(W);
  return eval_polynomial(cr_polynomial(r), W) * std::exp(W);
}

RegimeMoments critical_edge_moments(std::int64_t n) {
  if (n < 2) throw InvalidArgument("critical_edge_moments: n must be >= 2");
  const double W = lambert_w(static_cast<double>(n));
  const double eW = std::exp(W);
  const auto P2 = cr_polynomial(2);
  const auto P3 = cr_polynomial(3);
  const auto P4 = cr_polynomial(4);
  // c_2 c_4 - c_3^2 = e^{2W} (P_2 P_4 - P_3^2), expanded exactly.
  const auto disc = poly_sub(poly_mul(P2, P4), poly_mul(P3, P3));
  RegimeMoments m{Regime::critical, 0.0, 0.0};
  m.mean = 0.5 * W * W * eW;
  m.variance = eW * eval_polynomial(disc, W) / (4.0 * eval_polynomial(P2, W));
  return m;
}

double bell_asymptotic(std::int64_t n) {
  if (n < 1) throw InvalidArgument("bell_asymptotic: n must be >= 1");
  const double r = lambert_w(static_cast<double>(n) + 1.0);
  return std::expm1(r) - static_cast<double>(n) * std::log(r) -
         0.5 * (std::log(2.0 * kPi * r * (r + 1.0)) + r);
}

double log_C_r(double w, int r, double gamma) {
  if (!(w > 0.0 && w < 1.0)) throw InvalidArgument("log_C_r: w must lie in (0, 1)");
  if (r < 0) throw InvalidArgument("log_C_r: r must be >= 0");
  const SaddleSeries series(w, gamma);
  return static_cast<double>(series.shift + std::log(series.raw(r)));
}

SaddlePoint saddle_point(double w, std::int64_t n, double s) {
  check_subcritical(w, n, "saddle_point");
  const double log_target = std::log(static_cast<double>(n)) - s;
  const double target = std::exp(log_target);
  // C_1 <= e^g exp(e^g) and C_1 >= e^g bracket the root.
  double lo = std::log(lambert_w(target));
  double hi = log_target;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::fabs(hi)); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (log_C_r(w, 1, mid) < log_target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  SaddlePoint sp;
  sp.gamma = 0.5 * (lo + hi);
  const double L = -std::log(w);
  sp.tau = lambert_w(L / std::sqrt(w) * std::exp(sp.gamma)) / L;
  const double x_log = std::log(sp.tau) + (sp.tau - 0.5) * L;
  sp.residual = std::fabs(std::exp(log_C_r(w, 1, x_log)) - target) / static_cast<double>(n);
  return sp;
}

double tau_of_n(double w, std::int64_t n, double s) { return saddle_point(w, n, s).tau; }

RegimeMoments subcritical_clique_moments(double w, std::int64_t n, MomentForm form) {
  check_subcritical(w, n, "subcritical_clique_moments");
  const SaddlePoint sp = saddle_point(w, n);
  RegimeMoments m{Regime::subcritical_cliques, 0.0, 0.0};
  if (form == MomentForm::leading) {
    const ThetaTriple e = theta_triple(w, sp.tau);
    m.mean = static_cast<double>(n) / sp.tau;
    m.variance = static_cast<double>(n) / (sp.tau * sp.tau * sp.tau) * discrete_gaussian_variance(e);
    return m;
  }
  const SaddleSeries ser(w, sp.gamma);
  const long double C0 = ser.C(0);
  const long double C1 = ser.C(1);
  const long double C2 = ser.C(2);
  const long double C3 = ser.C(3);
  // C_0 - C_1^2/C_2 = C_0 Var(k) / E[k^2] under nu.
  m.variance = static_cast<double>(C0 * ser.tilted_variance(0) * ser.raw(0) / ser.raw(2));
  long double mean = C0;
  if (form == MomentForm::corrected) mean -= 0.5L * (1.0L - C1 * C3 / (C2 * C2));
  m.mean = static_cast<double>(mean);
  return m;
}

RegimeMoments subcritical_edge_moments(double w, std::int64_t n, MomentForm form) {
  check_subcritical(w, n, "subcritical_edge_moments");
  const SaddlePoint sp = saddle_point(w, n);
  RegimeMoments m{Regime::subcritical_edges, 0.0, 0.0};
  if (form == MomentForm::leading) {
    const ThetaTriple e = theta_triple(w, sp.tau);
    m.mean = 0.5 * static_cast<double>(n) * sp.tau;
    m.variance = 0.25 * static_cast<double>(n) * sp.tau * discrete_gaussian_variance(e);
    return m;
  }
  const SaddleSeries ser(w, sp.gamma);
  const long double C1 = ser.C(1);
  const long double C2 = ser.C(2);
  const long double C3 = ser.C(3);
  const long double C4 = ser.C(4);
  // (C_2 C_4 - C_3^2)/(4 C_2) = C_2 Var_{k^2 nu}(k) / 4.
  m.variance = static_cast<double>(C2 * ser.tilted_variance(2) / 4.0L);
  long double mean = 0.5L * (C2 - C1);
  if (form == MomentForm::corrected) {
    const long double gp = -(C3 - C2) / (2.0L * C2);
    mean -= 0.5L * ((C4 - C3) / 2.0L + gp * C3) / C2;
  }
  m.mean = static_cast<double>(mean);
  return m;
}

RegimeMoments subcritical_degree_moments(double w, std::int64_t n, MomentForm form) {
  check_subcritical(w, n, "subcritical_degree_moments");
  const SaddlePoint sp = saddle_point(w, n);
  RegimeMoments m{Regime::subcritical_degree, 0.0, 0.0};
  if (form == MomentForm::leading) {
    const ThetaTriple e = theta_triple(w, sp.tau);
    m.mean = sp.tau - 1.0 + e.e1 / e.e0;
    m.variance = discrete_gaussian_variance(e);
    return m;
  }
  const SaddleSeries ser(w, sp.gamma);
  // The size-biased clique size has weights k nu_k.
  m.variance = static_cast<double>(ser.tilted_variance(1));
  if (form == MomentForm::corrected) {
    m.mean = 2.0 * subcritical_edge_moments(w, n, MomentForm::corrected).mean / static_cast<double>(n);
  } else {
    m.mean = static_cast<double>(ser.raw(2) / ser.raw(1) - 1.0L);
  }
  return m;
}

double discrete_gaussian_pmf(double w, double lambda, std::int64_t d) {
  if (!(w > 0.0 && w < 1.0)) throw InvalidArgument("discrete_gaussian_pmf: w must lie in (0, 1)");
  if (!(lambda >= 0.0 && lambda < 1.0)) throw InvalidArgument("discrete_gaussian_pmf: lambda must lie in [0, 1)");
  const double norm = e_w_ell({w, lambda, 0.0, 0}, ThetaMethod::direct).real();
  const double x = static_cast<double>(d) - lambda;
  return std::exp(0.5 * x * x * std::log(w)) / norm;
}

double poisson_tv(std::int64_t n) {
  if (n < 2) throw InvalidArgument("poisson_tv: n must be >= 2");
  const BellTable table = build_bell_table(n, EdgeBias::from_t(0.0));
  const Pmf deg = degree_pmf(table, n);
  const double lambda = lambert_w(static_cast<double>(n));
  const double ll = std::log(lambda);
  double tv = 0.0;
  double q_mass = 0.0;
  for (std::int64_t d = 0;; ++d) {
    const double q = std::exp(static_cast<double>(d) * ll - lambda - std::lgamma(static_cast<double>(d) + 1.0));
    q_mass += q;
    tv += std::fabs(deg.at(d) - q);
    if (d >= n - 1 && static_cast<double>(d) > lambda && 1.0 - q_mass < 1e-12) break;
  }
  return 0.5 * (tv + std::max(0.0, 1.0 - q_mass));
}

std::pair<double, double> sparse_degree_limit(double lambda) {
  if (!(lambda > 0.0)) throw InvalidArgument("sparse_degree_limit: lambda must be > 0");
  const double p0 = 2.0 / (1.0 + std::sqrt(4.0 * lambda + 1.0));
  return {p0, 1.0 - p0};
}

double sparse_exponent(int d, int d_prime) {
  if (d < 0 || d_prime < 0) throw InvalidArgument("sparse_exponent: degrees must be >= 0");
  const double x = static_cast<double>(d_prime - d) / static_cast<double>(d + 1);
  return x * x;
}

double supercritical_complete_prob(double w, std::int64_t n, int R) {
  if (!(w > 1.0)) throw InvalidArgument("supercritical_complete_prob: w must be > 1");
  if (R < 1 || R > 3) throw InvalidArgument("supercritical_complete_prob: R must lie in 1..3");
  if (n < 1) throw InvalidArgument("supercritical_complete_prob: n must be >= 1");
  const double nd = static_cast<double>(n);
  const double decay = std::exp(-nd * std::log(w));
  double v = 1.0;
  if (R >= 2) v += decay * (-w * nd);
  if (R >= 3) v += decay * decay * (0.5 * w * w) * ((w * w + w) * nd + (2.0 - w - w * w) * nd * nd);
  return v;
}

}  // namespace rcg
