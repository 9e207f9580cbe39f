// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace rcg {

// Principal branch of the Lambert W function for x >= 0 (Halley iteration).
double lambert_w(double x);

// Coefficients (index = power) of P_r with P_1 = z, P_{r+1} = z P_r + z P_r'.
std::vector<std::int64_t> cr_polynomial(int r);
double eval_polynomial(const std::vector<std::int64_t>& coeffs, double z);

// c_r = P_r(W(n)) e^{W(n)} for r >= 1, c_0 = e^{W(n)} - 1; r <= 8.
double c_r(std::int64_t n, int r);

enum class Regime { critical, subcritical_cliques, subcritical_edges, subcritical_degree };

struct RegimeMoments {
  Regime regime;
  double mean;
  double variance;
};

// mean = (c_2 - c_1)/2, variance = (c_2 c_4 - c_3^2)/(4 c_2).
RegimeMoments critical_edge_moments(std::int64_t n);

// Main term of log(B_n / n!) with r = W(n + 1).
double bell_asymptotic(std::int64_t n);

enum class ThetaMethod { direct, fourier };

struct ThetaParams {
  double w;
  double tau;
  double theta;
  int ell;
};

// e_{w,l}(tau, theta) = sum_{t + tau in Z} t^l w^{t^2/2} e^{i t theta}.
std::complex<double> e_w_ell(const ThetaParams& params, ThetaMethod method);

// E_{w,r}(tau, theta) by its defining sum over k >= 1.
std::complex<double> E_w_r(double w, int r, double tau, double theta);

// Expansion coefficients a_{k,l}(r), k <= 2.
double expansion_coefficient(int k, int ell, double r);

// sum_{k<K} tau^{-k} sum_l a_{k,l}(r) e_{w,l}(tau, theta), K <= 3.
std::complex<double> E_w_r_expansion(double w, int r, double tau, double theta, int K);

// log C_r(w, e^gamma) = log sum_{k>=1} k^r w^{C(k,2)} e^{gamma k} / k!, w in (0,1).
double log_C_r(double w, int r, double gamma);

struct SaddlePoint {
  double gamma;     // C_1(w, e^gamma) = n e^{-s}
  double tau;       // W((log(1/w)/sqrt(w)) e^gamma) / log(1/w)
  double residual;  // |C_1(w, tau (1/w)^{tau - 1/2}) - n e^{-s}| / n
};

SaddlePoint saddle_point(double w, std::int64_t n, double s = 0.0);
double tau_of_n(double w, std::int64_t n, double s = 0.0);

// corrected: saddle-point mean with its Gaussian-prefactor correction (default);
// saddle: H'(0) and H''(0) at the exact saddle point;
// leading: the e_{w,l} leading-order forms.
enum class MomentForm { corrected, saddle, leading };

RegimeMoments subcritical_clique_moments(double w, std::int64_t n,
                                         MomentForm form = MomentForm::corrected);
RegimeMoments subcritical_edge_moments(double w, std::int64_t n,
                                       MomentForm form = MomentForm::corrected);
RegimeMoments subcritical_degree_moments(double w, std::int64_t n,
                                         MomentForm form = MomentForm::corrected);

// P(X_lambda = d) = w^{(d - lambda)^2/2} / e_{w,0}(lambda, 0).
double discrete_gaussian_pmf(double w, double lambda, std::int64_t d);

// Total variation between the exact degree law at p = 1/2 and Poisson(W(n)).
double poisson_tv(std::int64_t n);

// Limit (P(D = 0), P(D = 1)) for p = lambda / n.
std::pair<double, double> sparse_degree_limit(double lambda);

// ((d' - d)/(d + 1))^2.
double sparse_exponent(int d, int d_prime);

// 1 + sum_{m=1}^{R-1} w^{-mn} P_m(n) with P_1 = -wn,
// P_2 = (w^2/2)((w^2 + w) n + (2 - w - w^2) n^2); w > 1, R in {1, 2, 3}.
double supercritical_complete_prob(double w, std::int64_t n, int R);

}  // namespace rcg
