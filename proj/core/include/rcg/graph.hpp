// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rcg/partition.hpp"

namespace rcg {

// Undirected simple graph on {0..n-1} stored as adjacency lists.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n);

  int n() const { return static_cast<int>(adj_.size()); }
  std::int64_t num_edges() const { return m_; }

  // Throws InvalidArgument on self-loops or out-of-range endpoints;
  // returns false if the edge already exists.
  bool add_edge(int u, int v);
  // Caller guarantees u != v, both in range, and the edge is new.
  void add_edge_unchecked(int u, int v);
  bool has_edge(int u, int v) const;

  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  // Edges as (u, v) with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const;

  // Graph whose edges are the intra-block pairs of the partition.
  static SimpleGraph cluster_graph(const Partition& part);

 private:
  std::vector<std::vector<int>> adj_;
  std::int64_t m_ = 0;
};

// Connected components as a partition.
Partition components(const SimpleGraph& g);

}  // namespace rcg
