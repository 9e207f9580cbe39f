// SPDX-License-Identifier: Apache-2.0
#include "rcg/rng.hpp"

#include "rcg/errors.hpp"

namespace rcg {

namespace {
__extension__ typedef unsigned __int128 u128;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed),
      stream_(stream),
      key0_(splitmix64(seed ^ 0x6A09E667F3BCC908ULL)),
      key1_(splitmix64(splitmix64(stream + 0xBB67AE8584CAA73BULL) ^ splitmix64(seed))) {}

std::uint64_t RngStream::next_u64() {
  const std::uint64_t c = counter_++;
  return splitmix64(splitmix64(c * 0xD1B54A32D192ED03ULL + key0_) ^ key1_);
}

double RngStream::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

std::uint64_t RngStream::uniform_int(std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("RngStream::uniform_int: bound must be positive");
  // Lemire's multiply-shift with rejection of the biased low range.
  u128 m = static_cast<u128>(next_u64()) * bound;
  std::uint64_t low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<u128>(next_u64()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

RngStream RngStream::split(std::uint64_t index) const {
  return RngStream(splitmix64(seed_ ^ splitmix64(stream_ + 0x3C6EF372FE94F82BULL)), index);
}

}  // namespace rcg
