// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "rcg/community.hpp"
#include "rcg/errors.hpp"

namespace rcg {

double erm_move_gain(double k_to_b, double k_to_a, double n_i, double N_b, double N_a, double gamma) {
  return (k_to_b - k_to_a) - gamma * n_i * (N_b - N_a + n_i);
}

ModularityState::ModularityState(const SimpleGraph& g, const Partition& part, double gamma)
    : g_(&g), gamma_(gamma), label_(part.labels()) {
  if (g.n() != part.n()) throw InvalidArgument("ModularityState: vertex counts differ");
  if (g.num_edges() == 0) throw InvalidArgument("ModularityState: graph has no edges");
  size_.assign(static_cast<std::size_t>(part.num_blocks()), 0);
  for (int l : label_) ++size_[l];
  intra_ = intra_edges(g, part);
  pairs_ = part.edges();
}

double ModularityState::move_gain(int v, int target) const {
  if (target < 0 || target > num_labels()) throw InvalidArgument("ModularityState: bad target label");
  const int a = label_[v];
  if (target == a) return 0.0;
  double k_b = 0.0;
  double k_a = 0.0;
  for (int u : g_->neighbors(v)) {
    if (label_[u] == target) k_b += 1.0;
    if (label_[u] == a) k_a += 1.0;
  }
  const double N_b = target == num_labels() ? 0.0 : static_cast<double>(size_[target]);
  return erm_move_gain(k_b, k_a, 1.0, N_b, static_cast<double>(size_[a]), gamma_) /
         static_cast<double>(g_->num_edges());
}

void ModularityState::move(int v, int target) {
  if (target < 0 || target > num_labels()) throw InvalidArgument("ModularityState: bad target label");
  const int a = label_[v];
  if (target == a) return;
  if (target == num_labels()) size_.push_back(0);
  std::int64_t k_b = 0;
  std::int64_t k_a = 0;
  for (int u : g_->neighbors(v)) {
    if (label_[u] == target) ++k_b;
    if (label_[u] == a) ++k_a;
  }
  intra_ += k_b - k_a;
  pairs_ += size_[target] - (size_[a] - 1);
  --size_[a];
  ++size_[target];
  label_[v] = target;
}

double ModularityState::value() const {
  return (static_cast<double>(intra_) - gamma_ * static_cast<double>(pairs_)) /
         static_cast<double>(g_->num_edges());
}

Partition ModularityState::partition() const { return Partition::from_labels(label_); }

namespace {

constexpr double kMinGain = 1e-10;

// Aggregated graph: integer edge weights between super nodes, node sizes in
// original vertices. Self-loop weights travel with the node and never enter gains.
struct LevelGraph {
  std::vector<std::vector<std::pair<int, std::int64_t>>> adj;
  std::vector<std::int64_t> size;

  int n() const { return static_cast<int>(size.size()); }
};

LevelGraph base_level(const SimpleGraph& g) {
  LevelGraph lg;
  lg.adj.resize(static_cast<std::size_t>(g.n()));
  lg.size.assign(static_cast<std::size_t>(g.n()), 1);
  for (int u = 0; u < g.n(); ++u) {
    for (int v : g.neighbors(u)) lg.adj[u].emplace_back(v, 1);
  }
  return lg;
}

// Repeated best-move sweeps in shuffled order; returns whether any node moved.
bool local_moving(const LevelGraph& lg, std::vector<int>& comm, double gamma, RngStream& rng) {
  const int n = lg.n();
  std::vector<std::int64_t> comm_size(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) comm_size[comm[i]] += lg.size[i];
  std::vector<int> free_labels;
  for (int c = n - 1; c >= 0; --c) {
    if (comm_size[c] == 0) free_labels.push_back(c);
  }
  std::vector<std::int64_t> k_to(static_cast<std::size_t>(n), 0);
  std::vector<int> touched;
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);

  bool any = false;
  for (int pass = 0; pass < 100000; ++pass) {
    rng.shuffle(order);
    bool moved = false;
    for (int i : order) {
      const int a = comm[i];
      for (const auto& [j, wgt] : lg.adj[i]) {
        if (j == i) continue;
        if (k_to[comm[j]] == 0) touched.push_back(comm[j]);
        k_to[comm[j]] += wgt;
      }
      const double ni = static_cast<double>(lg.size[i]);
      const double Na = static_cast<double>(comm_size[a]);
      const double ka = static_cast<double>(k_to[a]);
      int best = a;
      double best_gain = 0.0;
      auto consider = [&](int c, double kc, double Nc) {
        const double gain = erm_move_gain(kc, ka, ni, Nc, Na, gamma);
        if (gain > best_gain + kMinGain) {
          best = c;
          best_gain = gain;
        } else if (gain > best_gain - kMinGain && best != a && c < best) {
          best = c;
          best_gain = std::max(best_gain, gain);
        }
      };
      for (int c : touched) {
        if (c != a) consider(c, static_cast<double>(k_to[c]), static_cast<double>(comm_size[c]));
      }
      if (comm_size[a] > lg.size[i] && !free_labels.empty()) consider(free_labels.back(), 0.0, 0.0);
      for (int c : touched) k_to[c] = 0;
      touched.clear();
      if (best == a || best_gain <= kMinGain) continue;
      if (!free_labels.empty() && best == free_labels.back()) free_labels.pop_back();
      comm_size[a] -= lg.size[i];
      comm_size[best] += lg.size[i];
      if (comm_size[a] == 0) free_labels.push_back(a);
      comm[i] = best;
      moved = true;
      any = true;
    }
    if (!moved) break;
  }
  return any;
}

// Renumbers communities 0..k-1 in order of first appearance.
int compact(std::vector<int>& comm) {
  std::vector<int> remap(comm.size(), -1);
  int next = 0;
  for (int& c : comm) {
    if (remap[c] == -1) remap[c] = next++;
    c = remap[c];
  }
  return next;
}

LevelGraph aggregate(const LevelGraph& lg, const std::vector<int>& comm, int k) {
  LevelGraph out;
  out.adj.resize(static_cast<std::size_t>(k));
  out.size.assign(static_cast<std::size_t>(k), 0);
  std::vector<std::int64_t> acc(static_cast<std::size_t>(k), 0);
  std::vector<int> touched;
  std::vector<std::vector<int>> members(static_cast<std::size_t>(k));
  for (int i = 0; i < lg.n(); ++i) {
    members[comm[i]].push_back(i);
    out.size[comm[i]] += lg.size[i];
  }
  for (int c = 0; c < k; ++c) {
    for (int i : members[c]) {
      for (const auto& [j, wgt] : lg.adj[i]) {
        const int d = comm[j];
        if (acc[d] == 0) touched.push_back(d);
        acc[d] += wgt;
      }
    }
    std::sort(touched.begin(), touched.end());
    for (int d : touched) {
      // Intra-community weight is counted from both endpoints; keep it as a self-loop.
      out.adj[c].emplace_back(d, d == c ? acc[d] / 2 : acc[d]);
      acc[d] = 0;
    }
    touched.clear();
  }
  return out;
}

}  // namespace

Partition louvain(const SimpleGraph& g, double gamma, RngStream& rng) {
  if (g.num_edges() == 0) throw InvalidArgument("louvain: graph has no edges");
  const LevelGraph base = base_level(g);
  std::vector<int> labels(static_cast<std::size_t>(g.n()));
  std::iota(labels.begin(), labels.end(), 0);

  for (int round = 0; round < 1000; ++round) {
    bool changed = false;
    LevelGraph level = base;
    std::vector<int> node_of(labels.size());
    std::iota(node_of.begin(), node_of.end(), 0);
    std::vector<int> comm = labels;
    compact(comm);
    for (int depth = 0; depth < 1000; ++depth) {
      const bool moved = local_moving(level, comm, gamma, rng);
      changed = changed || moved;
      const int k = compact(comm);
      for (int& v : node_of) v = comm[v];
      if (depth > 0 && !moved) break;
      level = aggregate(level, comm, k);
      comm.resize(static_cast<std::size_t>(k));
      std::iota(comm.begin(), comm.end(), 0);
    }
    labels = node_of;
    if (!changed) break;
  }
  return Partition::from_labels(labels);
}

}  // namespace rcg
