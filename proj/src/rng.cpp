#include "orfkit/rng.hpp"

#include <array>

namespace orfkit {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

}  // namespace

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t index) {
  return mix(seed ^ mix(index + kGolden));
}

Engine make_engine(std::uint64_t seed) {
  std::array<std::uint32_t, 8> words{};
  std::uint64_t state = seed;
  for (std::size_t i = 0; i < words.size(); i += 2) {
    state += kGolden;
    const std::uint64_t v = mix(state);
    words[i] = static_cast<std::uint32_t>(v);
    words[i + 1] = static_cast<std::uint32_t>(v >> 32);
  }
  std::seed_seq seq(words.begin(), words.end());
  return Engine(seq);
}

std::string_view rng_identifier() {
  return "mt19937_64/seed_seq(splitmix64)/std::normal_distribution";
}

}  // namespace orfkit
