// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "rcg/log_value.hpp"

namespace rcg {

// Edge bias of the conditioned Erdos-Renyi graph: t = log w = log(p/(1-p)).
// t = -inf (p = 0) is allowed; p = 1 is rejected.
class EdgeBias {
 public:
  static EdgeBias from_p(double p);
  static EdgeBias from_w(double w);
  static EdgeBias from_t(double t);

  double t() const { return t_; }
  double p() const { return p_; }
  double w() const { return w_; }
  bool degenerate() const;  // t = -inf

 private:
  EdgeBias(double t, double p, double w) : t_(t), p_(p), w_(w) {}
  double t_;
  double p_;
  double w_;
};

// p(t) = 1 / (1 + e^{-t}).
double p_of_t(double t);
// t(p) = log(p / (1 - p)).
double t_of_p(double p);

// log B_k(e^t) for k = 0..n_max. Immutable once built.
class BellTable {
 public:
  BellTable(std::int64_t n_max, EdgeBias bias, std::vector<double> log_b);

  std::int64_t n_max() const { return n_max_; }
  const EdgeBias& bias() const { return bias_; }
  double t() const { return bias_.t(); }
  double log_b(std::int64_t k) const;
  LogValue value(std::int64_t k) const { return LogValue(log_b(k)); }
  const std::vector<double>& log_b_array() const { return log_b_; }

  // log of the weight C(k-1, s-1) w^{C(s,2)} attached to a first block of size s.
  double log_block_weight(std::int64_t k, std::int64_t s) const;

 private:
  std::int64_t n_max_;
  EdgeBias bias_;
  std::vector<double> log_b_;
  std::vector<long double> log_fact_;
};

// log B_n = log sum_{s=1..n} C(n-1,s-1) e^{t C(s,2)} B_{n-s}, streaming log-sum-exp.
// Throws CapacityError if a log value leaves the finite range.
BellTable build_bell_table(std::int64_t n_max, EdgeBias bias);

// log B_{n-s} - log B_n.
double log_bell_ratio(const BellTable& table, std::int64_t n, std::int64_t s);

// C(n, 2) as a double (exact for the sizes used here).
inline double choose2(std::int64_t n) { return 0.5 * static_cast<double>(n) * static_cast<double>(n - 1); }

}  // namespace rcg
