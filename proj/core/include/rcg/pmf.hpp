// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

namespace rcg {

// Probability mass function on support_offset, support_offset + 1, ...
struct Pmf {
  std::int64_t support_offset = 0;
  std::vector<double> probs;
  // 1 minus the total mass before defensive normalization.
  double normalization_deficit = 0.0;

  std::int64_t size() const { return static_cast<std::int64_t>(probs.size()); }
  std::int64_t min_value() const { return support_offset; }
  std::int64_t max_value() const { return support_offset + size() - 1; }
  // Zero outside the support.
  double at(std::int64_t value) const;
  double total() const;
  double mean() const;
  double variance() const;
  std::int64_t mode() const;  // smallest maximizer

  // Divides by the current total and records the deficit.
  void normalize();
};

}  // namespace rcg
