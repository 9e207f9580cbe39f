// SPDX-License-Identifier: Apache-2.0
#include "rcg/exactdist.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "rcg/errors.hpp"

namespace rcg {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require_n(const BellTable& table, std::int64_t n, std::int64_t lo, const char* what) {
  if (n < lo || n > table.n_max()) {
    throw InvalidArgument(std::string(what) + ": n=" + std::to_string(n) + " outside " +
                          std::to_string(lo) + ".." + std::to_string(table.n_max()));
  }
}

double edge_weight(const BellTable& table, std::int64_t s) {
  if (s < 2) return 0.0;
  if (table.bias().degenerate()) return kNegInf;
  return table.t() * choose2(s);
}

// p_{k,s} = C(k-1,s-1) w^{C(s,2)} B_{k-s} / B_k for s = 1..k (index s-1).
std::vector<double> first_block_law(const BellTable& table, std::int64_t k) {
  std::vector<double> p(static_cast<std::size_t>(k));
  const double lbk = table.log_b(k);
  for (std::int64_t s = 1; s <= k; ++s) {
    const double lw = table.log_block_weight(k, s);
    p[s - 1] = lw == kNegInf ? 0.0 : std::exp(lw + table.log_b(k - s) - lbk);
  }
  return p;
}

Pmf from_log_masses(std::int64_t offset, const std::vector<double>& logs, double log_norm) {
  Pmf pmf;
  pmf.support_offset = offset;
  pmf.probs.resize(logs.size());
  for (std::size_t i = 0; i < logs.size(); ++i) {
    pmf.probs[i] = logs[i] == kNegInf ? 0.0 : std::exp(logs[i] - log_norm);
  }
  pmf.normalize();
  return pmf;
}

}  // namespace

Pmf degree_pmf(const BellTable& table, std::int64_t n) {
  require_n(table, n, 1, "degree_pmf");
  std::vector<double> logs(static_cast<std::size_t>(n));
  for (std::int64_t d = 0; d < n; ++d) logs[d] = table.log_block_weight(n, d + 1) + table.log_b(n - d - 1);
  return from_log_masses(0, logs, table.log_b(n));
}

Pmf clique_size_pmf(const BellTable& table, std::int64_t n) {
  Pmf pmf = degree_pmf(table, n);
  pmf.support_offset = 1;
  return pmf;
}

Pmf clique_count_pmf(const BellTable& table, std::int64_t n) {
  require_n(table, n, 1, "clique_count_pmf");
  // L[k][c] = log sum over partitions of k vertices into c blocks of w^m.
  std::vector<std::vector<double>> L(static_cast<std::size_t>(n) + 1);
  L[0] = {0.0};
  for (std::int64_t k = 1; k <= n; ++k) {
    std::vector<LogSumExp<double>> acc(static_cast<std::size_t>(k) + 1);
    for (std::int64_t s = 1; s <= k; ++s) {
      const double lw = table.log_block_weight(k, s);
      if (lw == kNegInf) continue;
      const auto& prev = L[k - s];
      for (std::size_t c = 0; c < prev.size(); ++c) acc[c + 1].add(lw + prev[c]);
    }
    L[k].resize(static_cast<std::size_t>(k) + 1);
    for (std::int64_t c = 0; c <= k; ++c) L[k][c] = acc[c].result();
  }
  std::vector<double> logs(L[n].begin() + 1, L[n].end());
  return from_log_masses(1, logs, table.log_b(n));
}

Pmf edge_count_pmf(const BellTable& table, std::int64_t n) {
  require_n(table, n, 1, "edge_count_pmf");
  if (n > 120) throw InvalidArgument("edge_count_pmf: n must be <= 120");
  // L[k][m] = log(#partitions of k vertices with m intra pairs) + m t.
  std::vector<std::vector<double>> L(static_cast<std::size_t>(n) + 1);
  L[0] = {0.0};
  for (std::int64_t k = 1; k <= n; ++k) {
    const std::int64_t mk = k * (k - 1) / 2;
    std::vector<LogSumExp<double>> acc(static_cast<std::size_t>(mk) + 1);
    for (std::int64_t s = 1; s <= k; ++s) {
      const double lw = table.log_block_weight(k, s);
      if (lw == kNegInf) continue;
      const std::int64_t shift = s * (s - 1) / 2;
      const auto& prev = L[k - s];
      for (std::size_t m = 0; m < prev.size(); ++m) acc[m + shift].add(lw + prev[m]);
    }
    L[k].resize(static_cast<std::size_t>(mk) + 1);
    for (std::int64_t m = 0; m <= mk; ++m) L[k][m] = acc[m].result();
  }
  return from_log_masses(0, L[n], table.log_b(n));
}

double log_prob_single_clique(const BellTable& table, std::int64_t n) {
  require_n(table, n, 1, "prob_single_clique");
  if (n == 1) return 0.0;
  const double e = edge_weight(table, n);
  if (e == kNegInf) return kNegInf;
  return e - table.log_b(n);
}

double prob_single_clique(const BellTable& table, std::int64_t n) {
  return std::exp(log_prob_single_clique(table, n));
}

double log_prob_not_single_clique(const BellTable& table, std::int64_t n) {
  require_n(table, n, 1, "log_prob_not_single_clique");
  LogSumExp<double> acc;
  for (std::int64_t s = 1; s < n; ++s) acc.add(table.log_block_weight(n, s) + table.log_b(n - s));
  return acc.result() - table.log_b(n);
}

std::vector<double> expected_edges_all(const BellTable& table, std::int64_t n) {
  require_n(table, n, 0, "expected_edges");
  std::vector<double> m(static_cast<std::size_t>(n) + 1, 0.0);
  for (std::int64_t k = 2; k <= n; ++k) {
    const auto p = first_block_law(table, k);
    double acc = 0.0;
    for (std::int64_t s = 1; s <= k; ++s) acc += p[s - 1] * (choose2(s) + m[k - s]);
    m[k] = acc;
  }
  return m;
}

double expected_edges(const BellTable& table, std::int64_t n) { return expected_edges_all(table, n)[n]; }

double edge_variance(const BellTable& table, std::int64_t n) {
  require_n(table, n, 1, "edge_variance");
  if (n < 2) return 0.0;
  if (table.t() == 0.0) {
    const double N = choose2(n);
    const double lr1 = log_bell_ratio(table, n, 1);
    const double r1 = std::exp(lr1);
    // r2 - r1^2 = r1^2 (B_{n-2} B_n / B_{n-1}^2 - 1)
    const double excess = r1 * r1 * std::expm1(log_bell_ratio(table, n, 2) - 2.0 * lr1);
    return N * (r1 - r1 * r1) + (N * N - N) * excess;
  }
  std::vector<double> m(static_cast<std::size_t>(n) + 1, 0.0);
  std::vector<double> v(static_cast<std::size_t>(n) + 1, 0.0);
  for (std::int64_t k = 2; k <= n; ++k) {
    const auto p = first_block_law(table, k);
    double mean = 0.0;
    for (std::int64_t s = 1; s <= k; ++s) mean += p[s - 1] * (choose2(s) + m[k - s]);
    double var = 0.0;
    for (std::int64_t s = 1; s <= k; ++s) {
      const double d = choose2(s) + m[k - s] - mean;
      var += p[s - 1] * (d * d + v[k - s]);
    }
    m[k] = mean;
    v[k] = var;
  }
  return v[n];
}

double edge_variance_second_difference(std::int64_t n, EdgeBias bias, double h) {
  if (n < 1) throw InvalidArgument("edge_variance_second_difference: n must be >= 1");
  if (bias.degenerate()) return 0.0;
  const double t = bias.t();
  const double up = build_bell_table(n, EdgeBias::from_t(t + h)).log_b(n);
  const double mid = build_bell_table(n, bias).log_b(n);
  const double down = build_bell_table(n, EdgeBias::from_t(t - h)).log_b(n);
  return (up - 2.0 * mid + down) / (h * h);
}

double expected_clique_count_by_size(const BellTable& table, std::int64_t n, std::int64_t s) {
  require_n(table, n, 1, "expected_clique_count_by_size");
  if (s < 1 || s > n) throw InvalidArgument("expected_clique_count_by_size: need 1 <= s <= n");
  const double e = edge_weight(table, s);
  if (e == kNegInf) return 0.0;
  return std::exp(log_binomial(n, s).logval + e + table.log_b(n - s) - table.log_b(n));
}

double expected_cliques_size_sum(const BellTable& table, std::int64_t n) {
  require_n(table, n, 1, "expected_cliques");
  double sum = 0.0;
  for (std::int64_t s = 1; s <= n; ++s) sum += expected_clique_count_by_size(table, n, s);
  return sum;
}

double expected_cliques(const BellTable& table, std::int64_t n) {
  require_n(table, n, 1, "expected_cliques");
  if (table.t() == 0.0 && table.n_max() >= n + 1) {
    return std::exp(table.log_b(n + 1) - table.log_b(n)) - 1.0;
  }
  return expected_cliques_size_sum(table, n);
}

double edges_pgf_eval(const BellTable& table_w, const BellTable& table_uw, std::int64_t n) {
  require_n(table_w, n, 0, "edges_pgf_eval");
  require_n(table_uw, n, 0, "edges_pgf_eval");
  return std::exp(table_uw.log_b(n) - table_w.log_b(n));
}

}  // namespace rcg
