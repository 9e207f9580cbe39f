// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

namespace rcg {

// A set partition of {0..n-1}; equivalently a cluster graph.
class Partition {
 public:
  Partition() = default;
  // Blocks must be disjoint, nonempty and cover {0..n-1}; throws otherwise.
  Partition(int n, std::vector<std::vector<int>> blocks);

  // Block label per vertex; labels need not be contiguous.
  static Partition from_labels(const std::vector<int>& labels);
  static Partition singletons(int n);
  static Partition single_block(int n);

  int n() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  std::int64_t num_blocks() const { return static_cast<std::int64_t>(blocks_.size()); }
  // m = sum over blocks of C(|block|, 2).
  std::int64_t edges() const;
  std::vector<int> block_sizes() const;
  int max_block() const;
  // Block index of every vertex, blocks numbered in order of their smallest vertex.
  std::vector<int> labels() const;
  bool same_block(int u, int v) const;

  // Sorted blocks ordered by smallest element; equal partitions compare equal.
  Partition canonical() const;
  friend bool operator==(const Partition& a, const Partition& b);

 private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> label_;
};

}  // namespace rcg
