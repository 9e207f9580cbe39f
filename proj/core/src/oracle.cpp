// SPDX-License-Identifier: Apache-2.0
#include "rcg/oracle.hpp"

#include <cmath>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "rcg/errors.hpp"

namespace rcg {

namespace {

void check_range(int n, int hi, const char* what) {
  if (n < 1 || n > hi) {
    throw InvalidArgument(std::string(what) + ": n must lie in 1.." + std::to_string(hi));
  }
}

}  // namespace

PartitionEnumerator::PartitionEnumerator(int n) : n_(n) {
  check_range(n, kOracleMaxN, "enumerate_partitions");
  a_.assign(static_cast<std::size_t>(n), 0);
  prefix_max_.assign(static_cast<std::size_t>(n), 0);
}

bool PartitionEnumerator::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
  } else {
    // prefix_max_[i] = max(a_[0..i-1]); a_[i] may grow up to prefix_max_[i] + 1.
    int i = n_ - 1;
    while (i >= 1 && a_[i] > prefix_max_[i]) --i;
    if (i < 1) {
      done_ = true;
      return false;
    }
    ++a_[i];
    for (int j = i + 1; j < n_; ++j) {
      a_[j] = 0;
      prefix_max_[j] = std::max(prefix_max_[j - 1], a_[j - 1]);
    }
  }
  int blocks = 0;
  for (int v = 0; v < n_; ++v) blocks = std::max(blocks, a_[v] + 1);
  sizes_.assign(static_cast<std::size_t>(blocks), 0);
  for (int v = 0; v < n_; ++v) ++sizes_[a_[v]];
  return true;
}

Partition PartitionEnumerator::partition() const { return Partition::from_labels(a_); }

std::int64_t PartitionEnumerator::edges() const {
  std::int64_t m = 0;
  for (int s : sizes_) m += static_cast<std::int64_t>(s) * (s - 1) / 2;
  return m;
}

PartitionEnumerator enumerate_partitions(int n) { return PartitionEnumerator(n); }

BigInt BellPolynomial::total() const {
  BigInt sum = 0;
  for (const auto& [m, c] : coeff) sum += c;
  return sum;
}

BigRational BellPolynomial::evaluate(const BigRational& w) const {
  BigRational sum = 0;
  for (const auto& [m, c] : coeff) {
    BigRational term = c;
    for (std::int64_t i = 0; i < m; ++i) term *= w;
    sum += term;
  }
  return sum;
}

double BellPolynomial::log_evaluate(double w) const {
  using Float = boost::multiprecision::cpp_bin_float_50;
  if (!(w >= 0.0)) throw InvalidArgument("BellPolynomial::log_evaluate: w must be >= 0");
  Float sum = 0;
  const Float fw = w;
  for (const auto& [m, c] : coeff) {
    sum += Float(c) * boost::multiprecision::pow(fw, static_cast<int>(m));
  }
  return static_cast<double>(boost::multiprecision::log(sum));
}

BellPolynomial bell_polynomial(int n) {
  check_range(n, kOracleMaxN, "bell_polynomial");
  std::map<std::int64_t, std::uint64_t> counts;
  auto it = enumerate_partitions(n);
  while (it.next()) ++counts[it.edges()];
  BellPolynomial poly;
  poly.n = n;
  for (const auto& [m, c] : counts) poly.coeff[m] = BigInt(c);
  return poly;
}

Pmf exact_statistic_pmf(int n, EdgeBias bias, Statistic statistic) {
  check_range(n, kOracleMaxPmfN, "exact_statistic_pmf");
  const std::int64_t max_edges = static_cast<std::int64_t>(n) * (n - 1) / 2;
  std::vector<long double> mass;
  Pmf pmf;
  switch (statistic) {
    case Statistic::cliques:
      pmf.support_offset = 1;
      mass.assign(static_cast<std::size_t>(n), 0.0L);
      break;
    case Statistic::edges:
      pmf.support_offset = 0;
      mass.assign(static_cast<std::size_t>(max_edges) + 1, 0.0L);
      break;
    case Statistic::degree:
      pmf.support_offset = 0;
      mass.assign(static_cast<std::size_t>(n), 0.0L);
      break;
  }
  const long double t = bias.t();
  long double total = 0.0L;
  auto it = enumerate_partitions(n);
  while (it.next()) {
    const std::int64_t m = it.edges();
    long double weight;
    if (m == 0) {
      weight = 1.0L;
    } else if (bias.degenerate()) {
      weight = 0.0L;
    } else {
      weight = std::exp(t * static_cast<long double>(m));
    }
    total += weight;
    switch (statistic) {
      case Statistic::cliques:
        mass[it.block_sizes().size() - 1] += weight;
        break;
      case Statistic::edges:
        mass[m] += weight;
        break;
      case Statistic::degree:
        for (int s : it.block_sizes()) {
          mass[s - 1] += weight * static_cast<long double>(s) / static_cast<long double>(n);
        }
        break;
    }
  }
  pmf.probs.resize(mass.size());
  for (std::size_t i = 0; i < mass.size(); ++i) pmf.probs[i] = static_cast<double>(mass[i] / total);
  return pmf;
}

}  // namespace rcg
