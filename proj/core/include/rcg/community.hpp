// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rcg/graph.hpp"
#include "rcg/partition.hpp"
#include "rcg/rng.hpp"

namespace rcg {

struct PpmParams {
  std::vector<int> community_sizes;
  double p_in = 0.0;
  double p_out = 0.0;

  int n() const;
  void validate() const;
};

struct LabeledGraph {
  SimpleGraph graph;
  Partition truth;
};

// Resolution at which ER-modularity maximization equals posterior maximization
// under a PPM(p_in, p_out) likelihood and a CG_{n,p} prior.
double gamma_resolution(double p_in, double p_out, double p);

LabeledGraph generate_ppm(const PpmParams& params, RngStream& rng);

// Number of edges of g with both endpoints in one block.
std::int64_t intra_edges(const SimpleGraph& g, const Partition& part);

// (m(G n G_C) - gamma m(G_C)) / m(G).
double erm(const SimpleGraph& g, const Partition& part, double gamma);

// log Likelihood(G_C; G) + log Prior(G_C), prior normalized by B_n(p/(1-p)).
double log_posterior(const SimpleGraph& g, const Partition& part, double p_in, double p_out,
                     double p);

// Unnormalized ERM change when a node of size n_i with k_to_b edges into block b
// and k_to_a edges into the rest of its block a moves from a (total size N_a,
// including the node) to b (total size N_b): (k_to_b - k_to_a) - gamma n_i (N_b - N_a + n_i).
double erm_move_gain(double k_to_b, double k_to_a, double n_i, double N_b, double N_a, double gamma);

// Single-vertex move bookkeeping for ER-modularity at one resolution.
class ModularityState {
 public:
  ModularityState(const SimpleGraph& g, const Partition& part, double gamma);

  // Change in ERM when vertex v moves to community `target` (may be a fresh id
  // equal to num_labels() for an empty community).
  double move_gain(int v, int target) const;
  void move(int v, int target);
  double value() const;
  Partition partition() const;
  int label(int v) const { return label_[v]; }
  int num_labels() const { return static_cast<int>(size_.size()); }

 private:
  const SimpleGraph* g_;
  double gamma_;
  std::vector<int> label_;
  std::vector<std::int64_t> size_;
  std::int64_t intra_ = 0;
  std::int64_t pairs_ = 0;
};

// Louvain local moving plus aggregation, iterated to a fixed point; the result
// admits no single-vertex move that increases ERM.
Partition louvain(const SimpleGraph& g, double gamma, RngStream& rng);

// k cliques of size s on a ring, consecutive cliques joined by one edge.
LabeledGraph ring_of_cliques(int k, int s);

// Pearson correlation of the intra-pair indicator vectors over all C(n,2) pairs.
double correlation_coefficient(const Partition& a, const Partition& b);

struct SweepConfig {
  std::vector<double> p_grid;
  int replicas = 20;
  std::vector<int> community_sizes;
  double p_in = 0.0;
  double p_out = 0.0;
  std::uint64_t seed = 0;
  int threads = 0;  // 0 = hardware concurrency

  // JSON object: {"p_grid": [...]} or {"p_min", "p_max", "p_step"},
  // "replicas", "sizes", "p_in", "p_out", "seed", optional "threads".
  static SweepConfig from_json(const std::string& text);
  static SweepConfig load(const std::string& path);
  // The Figure 4 setup: 5 x 200 vertices, p_in = 10/199, p_out = 1/80.
  static SweepConfig figure4_default();
};

struct SweepRow {
  double p;
  double mean_detected_edges;
  double mean_correlation;
  double stderr_correlation;
};

// For each p, Louvain at gamma_resolution(p_in, p_out, p) on the same replica
// graphs; replica i uses rng.split(i). Undefined correlations count as 0.
std::vector<SweepRow> figure4_sweep(const SweepConfig& config, const RngStream& rng);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace rcg
