// SPDX-License-Identifier: Apache-2.0
#include "rcg/pmf.hpp"

#include <algorithm>
#include <numeric>

#include "rcg/errors.hpp"

namespace rcg {

double Pmf::at(std::int64_t value) const {
  const std::int64_t i = value - support_offset;
  if (i < 0 || i >= size()) return 0.0;
  return probs[static_cast<std::size_t>(i)];
}

double Pmf::total() const { return std::accumulate(probs.begin(), probs.end(), 0.0); }

double Pmf::mean() const {
  double m = 0.0;
  for (std::int64_t i = 0; i < size(); ++i) m += static_cast<double>(support_offset + i) * probs[i];
  return m;
}

double Pmf::variance() const {
  const double mu = mean();
  double v = 0.0;
  for (std::int64_t i = 0; i < size(); ++i) {
    const double d = static_cast<double>(support_offset + i) - mu;
    v += d * d * probs[i];
  }
  return v;
}

std::int64_t Pmf::mode() const {
  if (probs.empty()) throw InvalidArgument("Pmf::mode: empty support");
  auto it = std::max_element(probs.begin(), probs.end());
  return support_offset + static_cast<std::int64_t>(it - probs.begin());
}

void Pmf::normalize() {
  const double sum = total();
  if (!(sum > 0.0)) throw InvalidArgument("Pmf::normalize: total mass is not positive");
  normalization_deficit = 1.0 - sum;
  for (double& p : probs) p /= sum;
}

}  // namespace rcg
