#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace orfkit {

/// The one place the generator is pinned. Reports carry rng_identifier().
using Engine = std::mt19937_64;

/// splitmix64 finalizer applied to (seed, index):
///   sub_seed = mix(seed ^ mix(index + 0x9E3779B97F4A7C15)).
/// Used for per-block, per-trial and per-draw streams so results never
/// depend on evaluation order or worker count.
std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t index);

/// Engine seeded from a 64-bit seed through splitmix64 expansion.
Engine make_engine(std::uint64_t seed);

/// Fills [first, last) with standard normal draws from a fresh stream.
template <class It>
void fill_standard_normal(It first, It last, std::uint64_t seed) {
  Engine engine = make_engine(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (; first != last; ++first) *first = normal(engine);
}

std::string_view rng_identifier();

}  // namespace orfkit
