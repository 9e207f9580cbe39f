// SPDX-License-Identifier: Apache-2.0
#include "rcg/graph.hpp"

#include <algorithm>

#include "rcg/errors.hpp"

namespace rcg {

SimpleGraph::SimpleGraph(int n) {
  if (n < 0) throw InvalidArgument("SimpleGraph: negative vertex count");
  adj_.resize(static_cast<std::size_t>(n));
}

bool SimpleGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n() || v >= n()) throw InvalidArgument("SimpleGraph: endpoint out of range");
  if (u == v) throw InvalidArgument("SimpleGraph: self-loop");
  if (has_edge(u, v)) return false;
  add_edge_unchecked(u, v);
  return true;
}

void SimpleGraph::add_edge_unchecked(int u, int v) {
  adj_[u].push_back(v);
  adj_[v].push_back(u);
  ++m_;
}

bool SimpleGraph::has_edge(int u, int v) const {
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  const int other = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::find(a.begin(), a.end(), other) != a.end();
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n(); ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SimpleGraph SimpleGraph::cluster_graph(const Partition& part) {
  SimpleGraph g(part.n());
  for (const auto& block : part.blocks()) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (std::size_t j = i + 1; j < block.size(); ++j) g.add_edge_unchecked(block[i], block[j]);
    }
  }
  return g;
}

Partition components(const SimpleGraph& g) {
  std::vector<int> label(static_cast<std::size_t>(g.n()), -1);
  std::vector<int> stack;
  int next = 0;
  for (int s = 0; s < g.n(); ++s) {
    if (label[s] != -1) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : g.neighbors(u)) {
        if (label[v] == -1) {
          label[v] = next;
          stack.push_back(v);
        }
      }
    }
    ++next;
  }
  return Partition::from_labels(label);
}

}  // namespace rcg
