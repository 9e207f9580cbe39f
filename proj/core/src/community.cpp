// SPDX-License-Identifier: Apache-2.0
#include "rcg/community.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rcg/bell.hpp"
#include "rcg/errors.hpp"

namespace rcg {

int PpmParams::n() const { return std::accumulate(community_sizes.begin(), community_sizes.end(), 0); }

void PpmParams::validate() const {
  if (community_sizes.empty()) throw InvalidArgument("PpmParams: no communities");
  for (int s : community_sizes) {
    if (s <= 0) throw InvalidArgument("PpmParams: community sizes must be positive");
  }
  if (!(p_in > 0.0 && p_in <= 1.0)) throw InvalidArgument("PpmParams: p_in must lie in (0, 1]");
  if (!(p_out >= 0.0 && p_out < 1.0)) throw InvalidArgument("PpmParams: p_out must lie in [0, 1)");
}

double gamma_resolution(double p_in, double p_out, double p) {
  if (!(p_out > 0.0 && p_out < p_in && p_in < 1.0)) {
    throw InvalidArgument("gamma_resolution: need 0 < p_out < p_in < 1");
  }
  if (!(p > 0.0 && p < 1.0)) throw InvalidArgument("gamma_resolution: p must lie in (0, 1)");
  const double num = std::log1p(-p_out) - std::log1p(-p_in) + std::log1p(-p) - std::log(p);
  const double den = std::log(p_in) + std::log1p(-p_out) - std::log(p_out) - std::log1p(-p_in);
  return num / den;
}

LabeledGraph generate_ppm(const PpmParams& params, RngStream& rng) {
  params.validate();
  const int n = params.n();
  std::vector<int> label(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> blocks;
  int v = 0;
  for (int c = 0; c < static_cast<int>(params.community_sizes.size()); ++c) {
    blocks.emplace_back();
    for (int i = 0; i < params.community_sizes[c]; ++i, ++v) {
      label[v] = c;
      blocks.back().push_back(v);
    }
  }
  SimpleGraph g(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const double p = label[a] == label[b] ? params.p_in : params.p_out;
      if (rng.bernoulli(p)) g.add_edge_unchecked(a, b);
    }
  }
  return {std::move(g), Partition(n, std::move(blocks))};
}

std::int64_t intra_edges(const SimpleGraph& g, const Partition& part) {
  if (g.n() != part.n()) throw InvalidArgument("intra_edges: vertex counts differ");
  const std::vector<int> label = part.labels();
  std::int64_t count = 0;
  for (int u = 0; u < g.n(); ++u) {
    for (int v : g.neighbors(u)) {
      if (u < v && label[u] == label[v]) ++count;
    }
  }
  return count;
}

double erm(const SimpleGraph& g, const Partition& part, double gamma) {
  if (g.num_edges() == 0) throw InvalidArgument("erm: graph has no edges");
  const double intra = static_cast<double>(intra_edges(g, part));
  const double pairs = static_cast<double>(part.edges());
  return (intra - gamma * pairs) / static_cast<double>(g.num_edges());
}

double log_posterior(const SimpleGraph& g, const Partition& part, double p_in, double p_out, double p) {
  for (double x : {p_in, p_out, p}) {
    if (!(x > 0.0 && x < 1.0)) throw InvalidArgument("log_posterior: probabilities must lie in (0, 1)");
  }
  const double both = static_cast<double>(intra_edges(g, part));
  const double mc = static_cast<double>(part.edges());
  const double mg = static_cast<double>(g.num_edges());
  const double N = choose2(g.n());
  const double log_lik = both * std::log(p_in) + (mc - both) * std::log1p(-p_in) +
                         (mg - both) * std::log(p_out) + (N - mc - mg + both) * std::log1p(-p_out);
  const BellTable table = build_bell_table(g.n(), EdgeBias::from_p(p));
  const double log_prior = mc * table.t() - table.log_b(g.n());
  return log_lik + log_prior;
}

LabeledGraph ring_of_cliques(int k, int s) {
  if (k < 3) throw InvalidArgument("ring_of_cliques: k must be >= 3");
  if (s < 2) throw InvalidArgument("ring_of_cliques: s must be >= 2");
  const int n = k * s;
  SimpleGraph g(n);
  std::vector<std::vector<int>> blocks(static_cast<std::size_t>(k));
  for (int c = 0; c < k; ++c) {
    for (int i = 0; i < s; ++i) {
      blocks[c].push_back(c * s + i);
      for (int j = i + 1; j < s; ++j) g.add_edge_unchecked(c * s + i, c * s + j);
    }
  }
  for (int c = 0; c < k; ++c) g.add_edge_unchecked(c * s + s - 1, ((c + 1) % k) * s);
  return {std::move(g), Partition(n, std::move(blocks))};
}

double correlation_coefficient(const Partition& a, const Partition& b) {
  if (a.n() != b.n()) throw InvalidArgument("correlation_coefficient: partitions differ in size");
  const double N = choose2(a.n());
  const double a1 = static_cast<double>(a.edges());
  const double b1 = static_cast<double>(b.edges());
  if (a1 == 0.0 || a1 == N || b1 == 0.0 || b1 == N) {
    throw UndefinedCorrelation("correlation_coefficient: a partition has no intra or no inter pairs");
  }
  const std::vector<int> la = a.labels();
  const std::vector<int> lb = b.labels();
  std::vector<std::pair<int, int>> cells(la.size());
  for (std::size_t v = 0; v < la.size(); ++v) cells[v] = {la[v], lb[v]};
  std::sort(cells.begin(), cells.end());
  double ab = 0.0;
  for (std::size_t i = 0; i < cells.size();) {
    std::size_t j = i;
    while (j < cells.size() && cells[j] == cells[i]) ++j;
    const double c = static_cast<double>(j - i);
    ab += 0.5 * c * (c - 1.0);
    i = j;
  }
  return (N * ab - a1 * b1) / std::sqrt(a1 * (N - a1) * b1 * (N - b1));
}

}  // namespace rcg
