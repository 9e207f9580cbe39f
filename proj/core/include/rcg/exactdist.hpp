// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "rcg/bell.hpp"
#include "rcg/pmf.hpp"

namespace rcg {

// P(D = d) = C(n-1,d) w^{C(d+1,2)} B_{n-d-1} / B_n for d = 0..n-1.
Pmf degree_pmf(const BellTable& table, std::int64_t n);

// Law of the size S = D + 1 of the clique containing a uniform vertex.
Pmf clique_size_pmf(const BellTable& table, std::int64_t n);

// Law of the number of cliques C (support 1..n), O(n^3).
Pmf clique_count_pmf(const BellTable& table, std::int64_t n);

// Law of the number of edges M (support 0..C(n,2)), O(n^4); n <= 120.
Pmf edge_count_pmf(const BellTable& table, std::int64_t n);

// P(C = 1) = w^{C(n,2)} / B_n.
double prob_single_clique(const BellTable& table, std::int64_t n);
double log_prob_single_clique(const BellTable& table, std::int64_t n);
// log(1 - P(C = 1)), summed directly without the s = n term.
double log_prob_not_single_clique(const BellTable& table, std::int64_t n);

// m_k = E[M_k] for k = 0..n by the first-block recursion.
std::vector<double> expected_edges_all(const BellTable& table, std::int64_t n);
double expected_edges(const BellTable& table, std::int64_t n);

// Var(M_n): Bell-ratio closed form at w = 1, exact total-variance recursion otherwise.
double edge_variance(const BellTable& table, std::int64_t n);
// d^2/dt^2 log B_n(e^t) by central second difference with step h.
double edge_variance_second_difference(std::int64_t n, EdgeBias bias, double h = 1e-4);

// E[number of cliques of size s] = C(n,s) w^{C(s,2)} B_{n-s} / B_n.
double expected_clique_count_by_size(const BellTable& table, std::int64_t n, std::int64_t s);

// E[C]: B_{n+1}/B_n - 1 when w = 1 and the table reaches n + 1, else the size sum.
double expected_cliques(const BellTable& table, std::int64_t n);
double expected_cliques_size_sum(const BellTable& table, std::int64_t n);

// PGF of M at u: B_n(uw) / B_n(w).
double edges_pgf_eval(const BellTable& table_w, const BellTable& table_uw, std::int64_t n);

}  // namespace rcg
