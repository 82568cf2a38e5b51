#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace retcache {

// All seeded randomness in the toolkit runs on std::mt19937_64, whose
// output sequence is fixed by the language standard, so the same seed
// reproduces bit-identical draws on every platform. Distributions are
// sampled from raw engine words below instead of the std distribution
// objects, which are not bit-portable.
inline constexpr std::string_view kGeneratorName = "mt19937_64";

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Engine seed for trial `index` of run `seed`. Substreams depend only on
// (seed, index), so parallel trial execution cannot change results.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) + index);
}

// 53-bit uniform in [0, 1).
inline double uniform01(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

// Knuth's multiplication method; adequate for the moderate means used here.
inline int poisson_sample(std::mt19937_64& engine, double mean) {
  const double limit = std::exp(-mean);
  int count = 0;
  double product = 1.0;
  do {
    ++count;
    product *= uniform01(engine);
  } while (product > limit);
  return count - 1;
}

}  // namespace retcache
