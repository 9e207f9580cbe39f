// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "rcg/bell.hpp"
#include "rcg/graph.hpp"
#include "rcg/partition.hpp"
#include "rcg/rng.hpp"

namespace rcg {

// Exact sampler for the random cluster graph with cached clique-size CDFs.
// Immutable after construction; sample() may be called concurrently with
// distinct RngStreams.
class ClusterSampler {
 public:
  // Caches one CDF row per k <= n when n <= kCacheLimit; larger n draws each
  // size by a sequential scan.
  static constexpr std::int64_t kCacheLimit = 3000;

  ClusterSampler(const BellTable& table, std::int64_t n);

  std::int64_t n() const { return n_; }
  Partition sample(RngStream& rng) const;
  // Size of the clique containing the anchor vertex when k vertices remain.
  std::int64_t draw_clique_size(std::int64_t k, RngStream& rng) const;

 private:
  BellTable table_;
  std::int64_t n_;
  std::vector<std::vector<double>> rows_;
};

// Samples P(G) = w^{m(G)} / B_n(w): the highest-index unassigned vertex draws its
// clique size from the degree law, then binds uniform unassigned partners.
Partition sample_cluster_graph(const BellTable& table, std::int64_t n, RngStream& rng);

// Draws G(n, p) until it is a cluster graph and returns its components.
// Throws SamplingExhausted after max_attempts rejections.
Partition rejection_sample(int n, double p, RngStream& rng, std::int64_t max_attempts);

// True iff every closed neighborhood is a clique (no induced path on 3 vertices).
bool is_cluster_graph(const SimpleGraph& g);

}  // namespace rcg
