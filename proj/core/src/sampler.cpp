// SPDX-License-Identifier: Apache-2.0
#include "rcg/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>

#include "rcg/errors.hpp"

namespace rcg {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::vector<double> make_cdf_row(const BellTable& table, std::int64_t k) {
  std::vector<double> row(static_cast<std::size_t>(k));
  const double lbk = table.log_b(k);
  double top = kNegInf;
  for (std::int64_t d = 0; d < k; ++d) {
    row[d] = table.log_block_weight(k, d + 1) + table.log_b(k - d - 1) - lbk;
    top = std::max(top, row[d]);
  }
  double acc = 0.0;
  for (std::int64_t d = 0; d < k; ++d) {
    acc += row[d] == kNegInf ? 0.0 : std::exp(row[d] - top);
    row[d] = acc;
  }
  for (double& c : row) c /= acc;
  row.back() = 1.0;
  return row;
}

std::int64_t draw_from_cdf(const std::vector<double>& cdf, RngStream& rng) {
  const double u = rng.uniform();
  auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  if (it == cdf.end()) --it;
  return static_cast<std::int64_t>(it - cdf.begin()) + 1;
}

// Inverse-CDF scan over the row: the weights already sum to
// one because log_b(k) is the exact normalizer, so the scan stops after about
// as many terms as the drawn size. Rounding mass beyond the last term goes to
// the last size with positive weight.
std::int64_t draw_by_scan(const BellTable& table, std::int64_t k, RngStream& rng) {
  const double u = rng.uniform();
  const double lbk = table.log_b(k);
  double acc = 0.0;
  std::int64_t last = 1;
  for (std::int64_t d = 0; d < k; ++d) {
    const double lp = table.log_block_weight(k, d + 1) + table.log_b(k - d - 1) - lbk;
    if (lp == kNegInf) continue;
    last = d + 1;
    acc += std::exp(lp);
    if (u < acc) return d + 1;
  }
  return last;
}

// Moves a uniform (size - 1)-subset of rem into block, keeping rem sorted.
void bind_partners(std::vector<int>& rem, std::int64_t partners, std::vector<char>& mark,
                   std::vector<int>& block, RngStream& rng) {
  if (partners <= 0) return;
  const std::int64_t K = static_cast<std::int64_t>(rem.size());
  const bool pick_chosen = partners <= K - partners;
  const std::int64_t m = pick_chosen ? partners : K - partners;
  // Floyd's algorithm: a uniform m-subset of {0..K-1}.
  for (std::int64_t j = K - m; j < K; ++j) {
    const std::int64_t r = static_cast<std::int64_t>(rng.uniform_int(static_cast<std::uint64_t>(j) + 1));
    if (mark[r]) {
      mark[j] = 1;
    } else {
      mark[r] = 1;
    }
  }
  std::size_t keep = 0;
  for (std::int64_t i = 0; i < K; ++i) {
    const bool chosen = (mark[i] != 0) == pick_chosen;
    mark[i] = 0;
    if (chosen) {
      block.push_back(rem[i]);
    } else {
      rem[keep++] = rem[i];
    }
  }
  rem.resize(keep);
}

template <typename DrawSize>
Partition sample_with(std::int64_t n, RngStream& rng, DrawSize&& draw) {
  std::vector<int> rem(static_cast<std::size_t>(n));
  std::iota(rem.begin(), rem.end(), 0);
  std::vector<char> mark(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> blocks;
  while (!rem.empty()) {
    const std::int64_t k = static_cast<std::int64_t>(rem.size());
    const int anchor = rem.back();
    rem.pop_back();
    const std::int64_t s = draw(k);
    std::vector<int> block{anchor};
    block.reserve(static_cast<std::size_t>(s));
    bind_partners(rem, s - 1, mark, block, rng);
    blocks.push_back(std::move(block));
  }
  return Partition(static_cast<int>(n), std::move(blocks));
}

}  // namespace

ClusterSampler::ClusterSampler(const BellTable& table, std::int64_t n) : table_(table), n_(n) {
  if (n < 0 || n > table.n_max()) throw InvalidArgument("ClusterSampler: n outside table range");
  if (n <= kCacheLimit) {
    rows_.resize(static_cast<std::size_t>(n) + 1);
    for (std::int64_t k = 1; k <= n; ++k) rows_[k] = make_cdf_row(table_, k);
  }
}

std::int64_t ClusterSampler::draw_clique_size(std::int64_t k, RngStream& rng) const {
  if (k < 1 || k > n_) throw InvalidArgument("ClusterSampler: k outside 1..n");
  if (!rows_.empty()) return draw_from_cdf(rows_[k], rng);
  return draw_by_scan(table_, k, rng);
}

Partition ClusterSampler::sample(RngStream& rng) const {
  return sample_with(n_, rng, [&](std::int64_t k) { return draw_clique_size(k, rng); });
}

Partition sample_cluster_graph(const BellTable& table, std::int64_t n, RngStream& rng) {
  if (n < 0 || n > table.n_max()) throw InvalidArgument("sample_cluster_graph: n outside table range");
  return sample_with(n, rng, [&](std::int64_t k) { return draw_from_cdf(make_cdf_row(table, k), rng); });
}

bool is_cluster_graph(const SimpleGraph& g) {
  std::vector<int> a;
  std::vector<int> b;
  for (int u = 0; u < g.n(); ++u) {
    for (int v : g.neighbors(u)) {
      if (v < u) continue;
      if (g.degree(u) != g.degree(v)) return false;
      a.assign(g.neighbors(u).begin(), g.neighbors(u).end());
      a.push_back(u);
      b.assign(g.neighbors(v).begin(), g.neighbors(v).end());
      b.push_back(v);
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) return false;
    }
  }
  return true;
}

Partition rejection_sample(int n, double p, RngStream& rng, std::int64_t max_attempts) {
  if (n < 0 || n > 32) throw InvalidArgument("rejection_sample: n must lie in 0..32");
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("rejection_sample: p must lie in [0, 1]");
  if (max_attempts < 1) throw InvalidArgument("rejection_sample: max_attempts must be >= 1");
  // Bitmask form of is_cluster_graph: closed neighborhoods of adjacent vertices coincide.
  std::vector<std::uint32_t> closed(static_cast<std::size_t>(n));
  for (std::int64_t attempt = 0; attempt < max_attempts; ++attempt) {
    for (int v = 0; v < n; ++v) closed[v] = std::uint32_t{1} << v;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng.bernoulli(p)) {
          closed[u] |= std::uint32_t{1} << v;
          closed[v] |= std::uint32_t{1} << u;
        }
      }
    }
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      std::uint32_t rest = closed[u] & ~(std::uint32_t{1} << u);
      while (rest != 0) {
        const int v = __builtin_ctz(rest);
        rest &= rest - 1;
        if (closed[v] != closed[u]) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    std::vector<int> label(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) label[v] = __builtin_ctz(closed[v]);
    return Partition::from_labels(label);
  }
  throw SamplingExhausted(max_attempts);
}

}  // namespace rcg
