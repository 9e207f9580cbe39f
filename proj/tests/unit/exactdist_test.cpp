// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "rcg/asymptotics.hpp"
#include "rcg/errors.hpp"
#include "rcg/exactdist.hpp"
#include "rcg/oracle.hpp"

namespace rcg {
namespace {

BellTable table_w(std::int64_t n, double w) { return build_bell_table(n, EdgeBias::from_w(w)); }

// Moments of a statistic by brute-force enumeration with exact rational weights.
struct BruteMoments {
  double mean;
  double variance;
};

BruteMoments brute_edges(int n, double w) {
  const Pmf pmf = exact_statistic_pmf(n, EdgeBias::from_w(w), Statistic::edges);
  return {pmf.mean(), pmf.variance()};
}

TEST(DegreePmfTest, Examples) {
  const Pmf a = degree_pmf(table_w(2, 1.0), 2);
  EXPECT_NEAR(a.at(0), 0.5, 1e-15);
  EXPECT_NEAR(a.at(1), 0.5, 1e-15);
  const Pmf b = degree_pmf(table_w(3, 1.0), 3);
  EXPECT_NEAR(b.at(0), 0.4, 1e-15);
  EXPECT_NEAR(b.at(1), 0.4, 1e-15);
  EXPECT_NEAR(b.at(2), 0.2, 1e-15);
  const Pmf c = degree_pmf(table_w(1, 7.0), 1);
  EXPECT_EQ(c.size(), 1);
  EXPECT_NEAR(c.at(0), 1.0, 1e-15);
  EXPECT_THROW(degree_pmf(table_w(3, 1.0), 4), InvalidArgument);
  EXPECT_THROW(degree_pmf(table_w(3, 1.0), 0), InvalidArgument);
}

TEST(DegreePmfTest, SumsToOneUpTo500) {
  for (double w : {0.2, 1.0, 3.0}) {
    const BellTable table = table_w(500, w);
    for (std::int64_t n : {1, 7, 50, 199, 500}) {
      const Pmf pmf = degree_pmf(table, n);
      EXPECT_LT(std::abs(pmf.normalization_deficit), 1e-9) << "w=" << w << " n=" << n;
      EXPECT_NEAR(pmf.total(), 1.0, 1e-12);
      for (double p : pmf.probs) EXPECT_GE(p, 0.0);
    }
  }
}

TEST(ExactPmfTest, CliqueAndEdgeLawsMatchEnumeration) {
  for (double w : {0.25, 1.0, 3.0}) {
    for (int n = 1; n <= 9; ++n) {
      const BellTable table = table_w(n, w);
      const Pmf c = clique_count_pmf(table, n);
      const Pmf m = edge_count_pmf(table, n);
      const Pmf bc = exact_statistic_pmf(n, EdgeBias::from_w(w), Statistic::cliques);
      const Pmf bm = exact_statistic_pmf(n, EdgeBias::from_w(w), Statistic::edges);
      for (int v = 0; v <= n; ++v) EXPECT_NEAR(c.at(v), bc.at(v), 1e-12);
      for (int v = 0; v <= n * (n - 1) / 2; ++v) EXPECT_NEAR(m.at(v), bm.at(v), 1e-12);
    }
  }
}

TEST(ExactPmfTest, CliqueSizeLawIsSizeBiasedDegree) {
  const BellTable table = table_w(60, 0.7);
  const Pmf s = clique_size_pmf(table, 60);
  const Pmf d = degree_pmf(table, 60);
  EXPECT_EQ(s.support_offset, 1);
  for (int k = 1; k <= 60; ++k) EXPECT_NEAR(s.at(k), d.at(k - 1), 1e-15);
}

TEST(ExactPmfTest, EdgePmfRangeGuard) {
  EXPECT_THROW(edge_count_pmf(table_w(121, 1.0), 121), InvalidArgument);
}

TEST(ProbSingleCliqueTest, Examples) {
  EXPECT_EQ(prob_single_clique(table_w(1, 0.3), 1), 1.0);
  EXPECT_NEAR(prob_single_clique(table_w(2, 1.0), 2), 0.5, 1e-15);
  EXPECT_NEAR(prob_single_clique(table_w(3, 1.0), 3), 0.2, 1e-15);
}

// P(single clique) saturates in double precision near 0 and 1, so strictness is checked on
// the log-odds log P - log(1 - P), whose two terms are each evaluated in log space.
TEST(ProbSingleCliqueTest, StrictlyIncreasingInP) {
  for (std::int64_t n : {5, 20, 100}) {
    double prev_p = 0.0;
    double prev_odds = -std::numeric_limits<double>::infinity();
    for (int i = 1; i <= 100; ++i) {
      const double p = i / 101.0;
      const BellTable table = build_bell_table(n, EdgeBias::from_p(p));
      const double v = prob_single_clique(table, n);
      const double odds = log_prob_single_clique(table, n) - log_prob_not_single_clique(table, n);
      EXPECT_GE(v, prev_p) << "n=" << n << " p=" << p;
      EXPECT_GT(odds, prev_odds) << "n=" << n << " p=" << p;
      prev_p = v;
      prev_odds = odds;
    }
  }
}

TEST(ProbSingleCliqueTest, ComplementInLogSpace) {
  for (double w : {0.5, 3.0}) {
    const BellTable table = table_w(12, w);
    for (int n = 2; n <= 12; ++n) {
      const double a = prob_single_clique(table, n);
      const double b = std::exp(log_prob_not_single_clique(table, n));
      EXPECT_NEAR(a + b, 1.0, 5e-14);
    }
  }
  // At w = 3, n = 20 the complement is about 20 * 3^-19; a direct 1 - P would be pure rounding.
  const double miss = std::exp(log_prob_not_single_clique(table_w(20, 3.0), 20));
  EXPECT_NEAR(miss / (20.0 * std::pow(3.0, -19.0)), 1.0, 0.01);
}

TEST(ExpectedEdgesTest, Examples) {
  EXPECT_EQ(expected_edges(table_w(1, 2.0), 1), 0.0);
  EXPECT_NEAR(expected_edges(table_w(2, 1.0), 2), 0.5, 1e-15);
  const BellTable t = table_w(100, 1.0);
  EXPECT_NEAR(expected_edges(t, 100), choose2(100) * std::exp(t.log_b(99) - t.log_b(100)),
              1e-11 * expected_edges(t, 100));
  EXPECT_EQ(expected_edges(t, 0), 0.0);
}

TEST(ExpectedEdgesTest, MatchesEnumerationAndFiniteDifference) {
  for (double w : {0.3, 1.0, 2.5}) {
    for (int n = 1; n <= 9; ++n) {
      EXPECT_NEAR(expected_edges(table_w(n, w), n), brute_edges(n, w).mean, 1e-12);
    }
    for (std::int64_t n : {10, 80}) {
      const double t = std::log(w);
      const double h = 1e-5;
      const double fd = (build_bell_table(n, EdgeBias::from_t(t + h)).log_b(n) -
                         build_bell_table(n, EdgeBias::from_t(t - h)).log_b(n)) /
                        (2.0 * h);
      EXPECT_NEAR(expected_edges(table_w(n, w), n), fd, 1e-6 * std::max(1.0, fd));
    }
  }
}

TEST(EdgeVarianceTest, Examples) {
  EXPECT_NEAR(edge_variance(table_w(2, 1.0), 2), 0.25, 1e-15);
  EXPECT_EQ(edge_variance(table_w(1, 0.4), 1), 0.0);
  const std::int64_t n = 200;
  const double v = edge_variance(table_w(n, 1.0), n);
  EXPECT_GE(v, 0.4 * n * std::log(static_cast<double>(n)));
}

TEST(EdgeVarianceTest, MatchesEnumerationAndSecondDifference) {
  for (double w : {0.25, 1.0, 3.0}) {
    for (int n = 1; n <= 9; ++n) {
      EXPECT_NEAR(edge_variance(table_w(n, w), n), brute_edges(n, w).variance, 1e-11);
    }
    // The second difference resolves Var(M) only while it is not swamped by rounding in
    // log B_n ~ t C(n,2); at w = 3 the variance is exponentially small beyond n ~ 10.
    for (std::int64_t n : w > 1.0 ? std::vector<std::int64_t>{6, 9} : std::vector<std::int64_t>{30, 150}) {
      const double exact = edge_variance(table_w(n, w), n);
      const double fd = edge_variance_second_difference(n, EdgeBias::from_w(w));
      EXPECT_NEAR(fd / exact, 1.0, 1e-4) << "w=" << w << " n=" << n;
    }
  }
}

TEST(CliqueCountBySizeTest, Examples) {
  const BellTable t = table_w(3, 1.0);
  EXPECT_NEAR(expected_clique_count_by_size(t, 3, 3), 0.2, 1e-15);
  EXPECT_NEAR(expected_clique_count_by_size(t, 3, 1), 1.2, 1e-15);
  EXPECT_NEAR(expected_clique_count_by_size(t, 3, 2), 0.6, 1e-15);
  EXPECT_THROW(expected_clique_count_by_size(t, 3, 0), InvalidArgument);
  EXPECT_THROW(expected_clique_count_by_size(t, 3, 4), InvalidArgument);
}

// E[C^(s)] ~ log(n)^s / s! converges only through W(n)/log n -> 1; the ratio is about 0.54 at
// n = 40 and must rise toward 1. The intermediate form W(n)^s / s! is already close.
TEST(CliqueCountBySizeTest, LogPowerTrend) {
  const BellTable t = table_w(4000, 1.0);
  double prev = 0.0;
  for (std::int64_t n : {40, 400, 4000}) {
    const double nn = static_cast<double>(n);
    const double v = expected_clique_count_by_size(t, n, 2);
    const double ratio = v / (std::log(nn) * std::log(nn) / 2.0);
    EXPECT_GT(ratio, prev);
    EXPECT_LT(ratio, 1.0);
    prev = ratio;
    EXPECT_NEAR(v / (lambert_w(nn) * lambert_w(nn) / 2.0), 1.0, 0.05) << n;
  }
}

TEST(CliqueCountBySizeTest, SizeWeightedSumIsN) {
  for (double w : {0.2, 1.0, 4.0}) {
    const BellTable t = table_w(300, w);
    for (std::int64_t n : {1, 10, 300}) {
      double sum = 0.0;
      for (std::int64_t s = 1; s <= n; ++s) sum += s * expected_clique_count_by_size(t, n, s);
      EXPECT_NEAR(sum, static_cast<double>(n), 1e-9 * n);
    }
  }
}

TEST(ExpectedCliquesTest, Examples) {
  EXPECT_NEAR(expected_cliques(table_w(3, 1.0), 3), 2.0, 1e-14);
  EXPECT_NEAR(expected_cliques(table_w(1, 5.0), 1), 1.0, 1e-15);
  const BellTable t = table_w(4, 1.0);
  EXPECT_NEAR(std::exp(t.log_b(4) - t.log_b(3)) - 1.0, expected_cliques(t, 3), 1e-14);
}

TEST(ExpectedCliquesTest, ClosedFormAtWOne) {
  const BellTable t = table_w(501, 1.0);
  for (std::int64_t n : {5, 50, 500}) {
    const double closed = std::exp(t.log_b(n + 1) - t.log_b(n)) - 1.0;
    EXPECT_NEAR(expected_cliques(t, n) / closed, 1.0, 1e-9);
    EXPECT_NEAR(expected_cliques_size_sum(t, n) / closed, 1.0, 1e-9);
  }
}

TEST(MomentConsistencyTest, EdgesFromCliqueSizes) {
  for (double w : {1.0 / 3.0, 1.0, 2.0}) {
    const BellTable t = table_w(200, w);
    for (std::int64_t n : {2, 17, 200}) {
      double sum = 0.0;
      for (std::int64_t s = 2; s <= n; ++s) sum += choose2(s) * expected_clique_count_by_size(t, n, s);
      const double m = expected_edges(t, n);
      EXPECT_NEAR(m, sum, 1e-8 * std::max(1.0, m)) << "w=" << w << " n=" << n;
    }
  }
}

TEST(EdgesPgfTest, Examples) {
  const BellTable t1 = table_w(2, 1.0);
  EXPECT_NEAR(edges_pgf_eval(t1, t1, 2), 1.0, 1e-15);
  EXPECT_NEAR(edges_pgf_eval(t1, table_w(2, 2.0), 2), 1.5, 1e-15);
  const std::int64_t n = 40;
  const double w = 0.8;
  const double h = 1e-5;
  const BellTable tw = table_w(n, w);
  const double up = edges_pgf_eval(tw, table_w(n, (1.0 + h) * w), n);
  const double down = edges_pgf_eval(tw, table_w(n, (1.0 - h) * w), n);
  EXPECT_NEAR((up - down) / (2.0 * h), expected_edges(tw, n), 1e-5 * expected_edges(tw, n));
}

}  // namespace
}  // namespace rcg
