// SPDX-License-Identifier: Apache-2.0
#include "rcg/partition.hpp"

#include <algorithm>
#include <unordered_map>

#include "rcg/errors.hpp"

namespace rcg {

Partition::Partition(int n, std::vector<std::vector<int>> blocks) : n_(n), blocks_(std::move(blocks)) {
  if (n < 0) throw InvalidArgument("Partition: negative n");
  label_.assign(static_cast<std::size_t>(n), -1);
  int covered = 0;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b].empty()) throw InvalidArgument("Partition: empty block");
    for (int v : blocks_[b]) {
      if (v < 0 || v >= n) throw InvalidArgument("Partition: label out of range");
      if (label_[v] != -1) throw InvalidArgument("Partition: blocks overlap");
      label_[v] = static_cast<int>(b);
      ++covered;
    }
  }
  if (covered != n) throw InvalidArgument("Partition: blocks do not cover {0..n-1}");
}

Partition Partition::from_labels(const std::vector<int>& labels) {
  std::unordered_map<int, int> index;
  std::vector<std::vector<int>> blocks;
  for (int v = 0; v < static_cast<int>(labels.size()); ++v) {
    auto [it, inserted] = index.emplace(labels[v], static_cast<int>(blocks.size()));
    if (inserted) blocks.emplace_back();
    blocks[it->second].push_back(v);
  }
  return Partition(static_cast<int>(labels.size()), std::move(blocks));
}

Partition Partition::singletons(int n) {
  std::vector<std::vector<int>> blocks(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) blocks[v] = {v};
  return Partition(n, std::move(blocks));
}

Partition Partition::single_block(int n) {
  if (n == 0) return Partition(0, {});
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) all[v] = v;
  return Partition(n, {std::move(all)});
}

std::int64_t Partition::edges() const {
  std::int64_t m = 0;
  for (const auto& b : blocks_) {
    const std::int64_t s = static_cast<std::int64_t>(b.size());
    m += s * (s - 1) / 2;
  }
  return m;
}

std::vector<int> Partition::block_sizes() const {
  std::vector<int> sizes;
  sizes.reserve(blocks_.size());
  for (const auto& b : blocks_) sizes.push_back(static_cast<int>(b.size()));
  return sizes;
}

int Partition::max_block() const {
  int best = 0;
  for (const auto& b : blocks_) best = std::max(best, static_cast<int>(b.size()));
  return best;
}

std::vector<int> Partition::labels() const {
  std::vector<int> out(static_cast<std::size_t>(n_), -1);
  int next = 0;
  std::vector<int> remap(blocks_.size(), -1);
  for (int v = 0; v < n_; ++v) {
    int& r = remap[label_[v]];
    if (r == -1) r = next++;
    out[v] = r;
  }
  return out;
}

bool Partition::same_block(int u, int v) const { return label_.at(u) == label_.at(v); }

Partition Partition::canonical() const {
  std::vector<std::vector<int>> blocks = blocks_;
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
  return Partition(n_, std::move(blocks));
}

bool operator==(const Partition& a, const Partition& b) {
  return a.n_ == b.n_ && a.labels() == b.labels();
}

}  // namespace rcg
