// SPDX-License-Identifier: Apache-2.0
#include "rcg/bell.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "rcg/errors.hpp"

namespace rcg {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

EdgeBias EdgeBias::from_p(double p) {
  if (!(p >= 0.0 && p < 1.0)) throw InvalidArgument("EdgeBias: p must lie in [0, 1)");
  if (p == 0.0) return EdgeBias(kNegInf, 0.0, 0.0);
  const double t = std::log(p) - std::log1p(-p);
  return EdgeBias(t, p, std::exp(t));
}

EdgeBias EdgeBias::from_w(double w) {
  if (!(w >= 0.0) || !std::isfinite(w)) throw InvalidArgument("EdgeBias: w must be finite and >= 0");
  if (w == 0.0) return EdgeBias(kNegInf, 0.0, 0.0);
  return EdgeBias(std::log(w), w / (1.0 + w), w);
}

EdgeBias EdgeBias::from_t(double t) {
  if (std::isnan(t) || t == std::numeric_limits<double>::infinity()) {
    throw InvalidArgument("EdgeBias: t must be < +inf");
  }
  if (t == kNegInf) return EdgeBias(kNegInf, 0.0, 0.0);
  const double w = std::exp(t);
  if (!std::isfinite(w)) throw CapacityError("EdgeBias: e^t overflows");
  return EdgeBias(t, p_of_t(t), w);
}

bool EdgeBias::degenerate() const { return t_ == kNegInf; }

double p_of_t(double t) {
  if (t == kNegInf) return 0.0;
  if (t >= 0.0) return 1.0 / (1.0 + std::exp(-t));
  const double e = std::exp(t);
  return e / (1.0 + e);
}

double t_of_p(double p) {
  if (!(p >= 0.0 && p < 1.0)) throw InvalidArgument("t_of_p: p must lie in [0, 1)");
  if (p == 0.0) return kNegInf;
  return std::log(p) - std::log1p(-p);
}

BellTable::BellTable(std::int64_t n_max, EdgeBias bias, std::vector<double> log_b)
    : n_max_(n_max), bias_(bias), log_b_(std::move(log_b)) {
  if (n_max < 0 || log_b_.size() != static_cast<std::size_t>(n_max) + 1) {
    throw InvalidArgument("BellTable: log_b must have n_max + 1 entries");
  }
  log_fact_.resize(log_b_.size());
  for (std::int64_t k = 0; k <= n_max; ++k) log_fact_[k] = log_factorial(k);
}

double BellTable::log_b(std::int64_t k) const {
  if (k < 0 || k > n_max_) {
    throw InvalidArgument("BellTable: index " + std::to_string(k) + " outside 0.." +
                          std::to_string(n_max_));
  }
  return log_b_[static_cast<std::size_t>(k)];
}

double BellTable::log_block_weight(std::int64_t k, std::int64_t s) const {
  if (s < 1 || s > k) return kNegInf;
  const double edge_part = (s == 1) ? 0.0 : (bias_.degenerate() ? kNegInf : bias_.t() * choose2(s));
  if (edge_part == kNegInf) return kNegInf;
  if (k > n_max_) return log_binomial(k - 1, s - 1).logval + edge_part;
  return static_cast<double>(log_fact_[k - 1] - log_fact_[s - 1] - log_fact_[k - s]) + edge_part;
}

BellTable build_bell_table(std::int64_t n_max, EdgeBias bias) {
  if (n_max < 0) throw InvalidArgument("build_bell_table: n_max must be >= 0");
  std::vector<double> out(static_cast<std::size_t>(n_max) + 1, 0.0);
  if (bias.degenerate()) return BellTable(n_max, bias, std::move(out));

  const long double t = bias.t();
  std::vector<long double> lb(out.size(), 0.0L);
  std::vector<long double> lf(out.size(), 0.0L);
  for (std::int64_t k = 1; k <= n_max; ++k) lf[k] = log_factorial(k);

  for (std::int64_t n = 2; n <= n_max; ++n) {
    LogSumExp<long double> acc;
    for (std::int64_t s = 1; s <= n; ++s) {
      const long double lbin = lf[n - 1] - lf[s - 1] - lf[n - s];
      const long double ls = static_cast<long double>(s);
      acc.add(lbin + t * ls * (ls - 1.0L) * 0.5L + lb[n - s]);
    }
    lb[n] = acc.result();
    out[n] = static_cast<double>(lb[n]);
    if (!std::isfinite(out[n])) {
      throw CapacityError("build_bell_table: log B_" + std::to_string(n) +
                          " is not finite in double precision");
    }
  }
  return BellTable(n_max, bias, std::move(out));
}

double log_bell_ratio(const BellTable& table, std::int64_t n, std::int64_t s) {
  if (s < 0 || s > n || n > table.n_max()) {
    throw InvalidArgument("log_bell_ratio: need 0 <= s <= n <= n_max");
  }
  if (s == 0) return 0.0;
  return table.log_b(n - s) - table.log_b(n);
}

}  // namespace rcg
