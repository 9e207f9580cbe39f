// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rcg/bell.hpp"
#include "rcg/partition.hpp"
#include "rcg/pmf.hpp"

namespace rcg {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline constexpr int kOracleMaxN = 13;
inline constexpr int kOracleMaxPmfN = 11;

// Restricted-growth-string enumeration of the set partitions of {0..n-1},
// in lexicographic order of the strings.
class PartitionEnumerator {
 public:
  explicit PartitionEnumerator(int n);

  // Advances; false once every partition has been produced.
  bool next();
  const std::vector<int>& rgs() const { return a_; }
  Partition partition() const;
  // Block sizes of the current partition (indexed by block label).
  const std::vector<int>& block_sizes() const { return sizes_; }
  std::int64_t edges() const;

 private:
  int n_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> a_;
  std::vector<int> prefix_max_;
  std::vector<int> sizes_;
};

PartitionEnumerator enumerate_partitions(int n);

// Coefficients of B_n(w) by edge count.
struct BellPolynomial {
  int n = 0;
  std::map<std::int64_t, BigInt> coeff;

  BigInt total() const;
  BigRational evaluate(const BigRational& w) const;
  // log B_n(w) in 50-digit binary floating point, rounded to double.
  double log_evaluate(double w) const;
};

BellPolynomial bell_polynomial(int n);

enum class Statistic { cliques, edges, degree };

// Exact pmf by enumeration, weights w^m / B_n(w). Degree is the law of a
// uniformly chosen vertex.
Pmf exact_statistic_pmf(int n, EdgeBias bias, Statistic statistic);

}  // namespace rcg
