// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "rcg/bell.hpp"
#include "rcg/community.hpp"
#include "rcg/errors.hpp"
#include "rcg/oracle.hpp"

namespace rcg {
namespace {

SimpleGraph two_triangles() {
  SimpleGraph g(6);
  for (int base : {0, 3}) {
    g.add_edge(base, base + 1);
    g.add_edge(base + 1, base + 2);
    g.add_edge(base, base + 2);
  }
  return g;
}

SimpleGraph random_graph(int n, double p, RngStream& rng) {
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.uniform() < p) g.add_edge(u, v);
    }
  }
  return g;
}

// Pearson correlation of pair indicators computed from scratch over all pairs.
double brute_correlation(const Partition& a, const Partition& b) {
  const int n = a.n();
  double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0, cnt = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const double x = a.same_block(u, v);
      const double y = b.same_block(u, v);
      sx += x;
      sy += y;
      sxx += x * x;
      syy += y * y;
      sxy += x * y;
      cnt += 1;
    }
  }
  const double cov = sxy / cnt - sx * sy / (cnt * cnt);
  return cov / std::sqrt((sxx / cnt - sx * sx / (cnt * cnt)) * (syy / cnt - sy * sy / (cnt * cnt)));
}

TEST(GammaResolutionTest, Examples) {
  EXPECT_NEAR(gamma_resolution(0.8, 0.2, 0.5), 0.5, 1e-15);
  EXPECT_NEAR(gamma_resolution(0.6, 0.4, 0.5), 0.5, 1e-15);
  EXPECT_THROW(gamma_resolution(0.3, 0.3, 0.5), InvalidArgument);
  EXPECT_THROW(gamma_resolution(0.2, 0.3, 0.5), InvalidArgument);
  const double p_in = 10.0 / 199.0;
  const double p_out = 1.0 / 80.0;
  const double expected = (std::log((1.0 - p_out) / (1.0 - p_in)) + std::log(0.5 / 0.5)) /
                          std::log(p_in * (1.0 - p_out) / (p_out * (1.0 - p_in)));
  EXPECT_NEAR(gamma_resolution(p_in, p_out, 0.5), expected, 1e-15);
}

TEST(GeneratePpmTest, DegenerateParameters) {
  RngStream rng(3);
  const LabeledGraph full = generate_ppm({{3, 4, 2}, 1.0, 0.0}, rng);
  EXPECT_EQ(SimpleGraph::cluster_graph(full.truth).num_edges(), full.graph.num_edges());
  EXPECT_EQ(components(full.graph), full.truth);
  EXPECT_THROW(generate_ppm({{3, 0}, 0.5, 0.1}, rng), InvalidArgument);
  EXPECT_THROW(generate_ppm({{3}, 1.5, 0.1}, rng), InvalidArgument);
}

TEST(GeneratePpmTest, ErdosRenyiEdgeCount) {
  RngStream rng(4);
  const double p = 0.3;
  const double pairs = 30.0 * 29.0 / 2.0;
  double total = 0.0;
  const int draws = 200;
  for (int i = 0; i < draws; ++i) total += static_cast<double>(generate_ppm({{10, 20}, p, p}, rng).graph.num_edges());
  const double sd = std::sqrt(pairs * p * (1.0 - p) / draws);
  EXPECT_NEAR(total / draws, pairs * p, 4.0 * sd);
}

TEST(GeneratePpmTest, FigureFourDegrees) {
  RngStream rng(5);
  const PpmParams params{{200, 200, 200, 200, 200}, 10.0 / 199.0, 1.0 / 80.0};
  const LabeledGraph lg = generate_ppm(params, rng);
  const std::int64_t intra = intra_edges(lg.graph, lg.truth);
  const std::int64_t inter = lg.graph.num_edges() - intra;
  // Mean intra-degree 2 intra / n, each count a binomial.
  const double intra_pairs = 5.0 * 200.0 * 199.0 / 2.0;
  const double inter_pairs = 1000.0 * 999.0 / 2.0 - intra_pairs;
  EXPECT_NEAR(2.0 * intra / 1000.0, 10.0, 4.0 * 2.0 * std::sqrt(intra_pairs * params.p_in) / 1000.0);
  EXPECT_NEAR(2.0 * inter / 1000.0, 10.0, 4.0 * 2.0 * std::sqrt(inter_pairs * params.p_out) / 1000.0);
}

TEST(ErmTest, Examples) {
  const SimpleGraph tri = SimpleGraph::cluster_graph(Partition::single_block(3));
  EXPECT_NEAR(erm(tri, Partition(3, {{0, 1}, {2}}), 0.5), 1.0 / 6.0, 1e-15);
  EXPECT_EQ(erm(tri, Partition::singletons(3), 0.7), 0.0);
  const SimpleGraph g = two_triangles();
  EXPECT_NEAR(erm(g, Partition::single_block(6), 0.3), 1.0 - 0.3 * 15.0 / 6.0, 1e-15);
  EXPECT_THROW(erm(SimpleGraph(3), Partition::singletons(3), 0.5), InvalidArgument);
}

TEST(LogPosteriorTest, AffineInErm) {
  RngStream rng(21);
  const double p_in = 0.7;
  const double p_out = 0.2;
  const double p = 0.4;
  const double gamma = gamma_resolution(p_in, p_out, p);
  const SimpleGraph g = random_graph(5, 0.5, rng);
  ASSERT_GT(g.num_edges(), 0);
  std::vector<std::pair<double, double>> pts;
  PartitionEnumerator it(5);
  while (it.next()) pts.emplace_back(erm(g, it.partition(), gamma), log_posterior(g, it.partition(), p_in, p_out, p));
  double slope = 0.0;
  bool have = false;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const double de = pts[i].first - pts[0].first;
    if (std::abs(de) < 1e-9) continue;
    const double s = (pts[i].second - pts[0].second) / de;
    if (!have) {
      slope = s;
      have = true;
    }
    EXPECT_NEAR(s, slope, 1e-9 * std::abs(slope));
  }
  EXPECT_GT(slope, 0.0);
}

TEST(LogPosteriorTest, EmptyGraphIsFinite) {
  const SimpleGraph g(4);
  PartitionEnumerator it(4);
  while (it.next()) EXPECT_TRUE(std::isfinite(log_posterior(g, it.partition(), 0.6, 0.1, 0.5)));
  EXPECT_GT(log_posterior(g, Partition::singletons(4), 0.6, 0.1, 0.5),
            log_posterior(g, Partition::single_block(4), 0.6, 0.1, 0.5));
}

TEST(LogPosteriorTest, NormalizedOverAllPartitionsAndGraphs) {
  // Summing prior * likelihood over every partition and every graph on 4 vertices gives 1.
  const int n = 4;
  const double p_in = 0.6, p_out = 0.3, p = 0.45;
  double total = 0.0;
  for (int mask = 0; mask < (1 << 6); ++mask) {
    SimpleGraph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v, ++bit) {
        if (mask & (1 << bit)) g.add_edge(u, v);
      }
    }
    PartitionEnumerator it(n);
    while (it.next()) total += std::exp(log_posterior(g, it.partition(), p_in, p_out, p));
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(LouvainTest, TwoTrianglesIsGlobalOptimum) {
  const SimpleGraph g = two_triangles();
  RngStream rng(1);
  const Partition found = louvain(g, 0.5, rng);
  EXPECT_EQ(found, Partition(6, {{0, 1, 2}, {3, 4, 5}}));
  double best = -1e300;
  PartitionEnumerator it(6);
  while (it.next()) best = std::max(best, erm(g, it.partition(), 0.5));
  EXPECT_NEAR(erm(g, found, 0.5), best, 1e-15);
}

TEST(LouvainTest, RingOfCliques) {
  const LabeledGraph ring = ring_of_cliques(10, 5);
  RngStream rng(2);
  EXPECT_EQ(louvain(ring.graph, 2.0 / 25.0, rng), ring.truth);
}

TEST(LouvainTest, SingleEdgeMerges) {
  SimpleGraph g(2);
  g.add_edge(0, 1);
  RngStream rng(3);
  EXPECT_EQ(louvain(g, 0.9, rng), Partition::single_block(2));
}

TEST(LouvainTest, SingleMoveOptimalOnRandomGraphs) {
  RngStream rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 20 + static_cast<int>(rng.uniform_int(40));
    const SimpleGraph g = random_graph(n, 0.15, rng);
    if (g.num_edges() == 0) continue;
    const double gamma = 0.05 + 0.3 * rng.uniform();
    const Partition part = louvain(g, gamma, rng);
    const double base = erm(g, part, gamma);
    std::vector<int> labels = part.labels();
    const int fresh = static_cast<int>(part.num_blocks());
    for (int v = 0; v < n; ++v) {
      const int orig = labels[v];
      for (int target = 0; target <= fresh; ++target) {
        if (target == orig) continue;
        labels[v] = target;
        EXPECT_LE(erm(g, Partition::from_labels(labels), gamma), base + 1e-12) << trial << "," << v;
      }
      labels[v] = orig;
    }
  }
}

TEST(LouvainTest, DeterministicGivenSeed) {
  RngStream g_rng(8);
  const SimpleGraph g = random_graph(60, 0.1, g_rng);
  RngStream a(99);
  RngStream b(99);
  EXPECT_EQ(louvain(g, 0.1, a), louvain(g, 0.1, b));
}

TEST(ModularityStateTest, IncrementalGainMatchesRecomputation) {
  RngStream rng(41);
  int checked = 0;
  while (checked < 1000) {
    const int n = 5 + static_cast<int>(rng.uniform_int(20));
    const SimpleGraph g = random_graph(n, 0.3, rng);
    if (g.num_edges() == 0) continue;
    const double gamma = rng.uniform();
    std::vector<int> labels(n);
    for (int& l : labels) l = static_cast<int>(rng.uniform_int(4));
    ModularityState state(g, Partition::from_labels(labels), gamma);
    for (int step = 0; step < 50; ++step, ++checked) {
      const int v = static_cast<int>(rng.uniform_int(n));
      const int target = static_cast<int>(rng.uniform_int(state.num_labels() + 1));
      const double before = erm(g, state.partition(), gamma);
      const double gain = state.move_gain(v, target);
      state.move(v, target);
      const double after = erm(g, state.partition(), gamma);
      EXPECT_LT(std::abs(gain - (after - before)), 1e-10);
      EXPECT_NEAR(state.value(), after, 1e-12);
    }
  }
}

TEST(ModularityStateTest, GainFormulaReducesForSingleVertex) {
  EXPECT_NEAR(erm_move_gain(3, 1, 1, 4, 5, 0.5), (3 - 1) - 0.5 * (4 - (5 - 1)), 1e-15);
}

TEST(RingOfCliquesTest, Examples) {
  const LabeledGraph r = ring_of_cliques(3, 3);
  EXPECT_EQ(r.graph.num_edges(), 12);
  EXPECT_EQ(r.truth.num_blocks(), 3);
  EXPECT_EQ(ring_of_cliques(10, 5).graph.num_edges(), 110);
  EXPECT_THROW(ring_of_cliques(2, 3), InvalidArgument);
  EXPECT_THROW(ring_of_cliques(3, 1), InvalidArgument);
}

TEST(CorrelationTest, Examples) {
  const Partition a(4, {{0, 1}, {2, 3}});
  const Partition b(4, {{0, 2}, {1, 3}});
  EXPECT_NEAR(correlation_coefficient(a, a), 1.0, 1e-15);
  EXPECT_NEAR(correlation_coefficient(a, b), -0.5, 1e-15);
  EXPECT_THROW(correlation_coefficient(a, Partition::singletons(4)), UndefinedCorrelation);
  EXPECT_THROW(correlation_coefficient(Partition::single_block(4), a), UndefinedCorrelation);
  EXPECT_THROW(correlation_coefficient(a, Partition::singletons(5)), InvalidArgument);
}

TEST(CorrelationTest, SymmetricAndOneOnlyForEqualPartitions) {
  for (int n = 3; n <= 6; ++n) {
    std::vector<Partition> all;
    PartitionEnumerator it(n);
    while (it.next()) {
      const Partition p = it.partition();
      if (p.num_blocks() > 1 && p.num_blocks() < n) all.push_back(p);
    }
    for (const Partition& x : all) {
      for (const Partition& y : all) {
        const double c = correlation_coefficient(x, y);
        EXPECT_EQ(c, correlation_coefficient(y, x));
        EXPECT_NEAR(c, brute_correlation(x, y), 1e-12);
        EXPECT_EQ(std::abs(c - 1.0) < 1e-12, x == y);
      }
    }
  }
}

TEST(CorrelationTest, IndependentPartitionsNearZero) {
  RngStream rng(17);
  int within = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> la(100), lb(100);
    for (int& l : la) l = static_cast<int>(rng.uniform_int(5));
    for (int& l : lb) l = static_cast<int>(rng.uniform_int(5));
    within += std::abs(correlation_coefficient(Partition::from_labels(la), Partition::from_labels(lb))) < 0.2;
  }
  EXPECT_EQ(within, 50);
}

SweepConfig small_sweep() {
  SweepConfig c;
  c.p_grid = {0.5, 0.6};
  c.replicas = 1;
  c.community_sizes = {15, 15, 15};
  c.p_in = 0.5;
  c.p_out = 0.05;
  c.seed = 5;
  c.threads = 2;
  return c;
}

TEST(SweepTest, DeterministicGivenSeed) {
  const SweepConfig c = small_sweep();
  const auto r1 = figure4_sweep(c, RngStream(c.seed));
  SweepConfig single = c;
  single.threads = 1;
  const auto r2 = figure4_sweep(single, RngStream(c.seed));
  std::ostringstream a, b;
  write_sweep_csv(a, r1);
  write_sweep_csv(b, r2);
  EXPECT_EQ(a.str(), b.str());
  ASSERT_EQ(r1.size(), 2u);
  EXPECT_EQ(a.str().substr(0, a.str().find('\n')), "p,mean_detected_edges,mean_correlation,stderr_correlation");
  EXPECT_LE(r1[0].mean_detected_edges, r1[1].mean_detected_edges);
}

TEST(SweepTest, ConfigParsing) {
  const SweepConfig grid = SweepConfig::from_json(
      R"({"p_min": 0.5, "p_max": 0.51, "p_step": 0.0005, "replicas": 3, "sizes": [10, 10],
          "p_in": 0.4, "p_out": 0.1, "seed": 12})");
  ASSERT_EQ(grid.p_grid.size(), 21u);
  EXPECT_NEAR(grid.p_grid.back(), 0.51, 1e-12);
  EXPECT_EQ(grid.replicas, 3);
  EXPECT_EQ(grid.seed, 12u);
  const SweepConfig list = SweepConfig::from_json(
      R"({"p_grid": [0.5, 0.52], "sizes": [4, 4], "p_in": 0.9, "p_out": 0.1, "seed": 1})");
  EXPECT_EQ(list.p_grid, (std::vector<double>{0.5, 0.52}));
  EXPECT_EQ(list.replicas, 20);
  EXPECT_THROW(SweepConfig::from_json("{not json"), InvalidArgument);
  EXPECT_THROW(SweepConfig::from_json(R"({"p_grid": [0.5], "sizes": [4], "p_in": 0.1, "p_out": 0.5, "seed": 1})"),
               InvalidArgument);
  const SweepConfig fig = SweepConfig::figure4_default();
  EXPECT_EQ(fig.community_sizes, (std::vector<int>(5, 200)));
  EXPECT_EQ(fig.replicas, 20);
}

}  // namespace
}  // namespace rcg
