#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace nashkit {

/// Seed for every deterministic stream in the library. Identical seed and
/// parameters give bit-identical output on any platform.
using Seed = std::uint64_t;

// splitmix64 finalizer, used to mix seeds and parameters into stream seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Domain separation tags so that different consumers of the same user seed
// draw from unrelated streams.
enum class StreamKind : std::uint64_t {
  kWinnerTakesAll = 1,
  kUniformPayoffs = 2,
  kSupportSamples = 3,
  kProfileDraw = 4,
};

/// Deterministic stream seeded by mixing (kind, seed, a, b). mt19937_64 is
/// fully specified by the standard, so the raw output is reproducible
/// across toolchains; only raw draws are used below, never the
/// implementation-defined <random> distributions.
inline std::mt19937_64 make_stream(StreamKind kind, Seed seed, std::uint64_t a,
                                   std::uint64_t b) {
  std::uint64_t s = splitmix64(static_cast<std::uint64_t>(kind));
  s = splitmix64(s ^ seed);
  s = splitmix64(s ^ a);
  s = splitmix64(s ^ b);
  return std::mt19937_64(s);
}

/// Uniform draw from {0, ..., bound-1} by rejection sampling (no modulo
/// bias). bound must be positive.
inline std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t bound) {
  // 2^64 mod bound; draws below this are folded into the rejected band.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t v = rng();
    if (v >= threshold) return (v - threshold) % bound;
  }
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Inverse-CDF draw from a probability vector. Falls back to the last
/// positive entry if rounding leaves the cumulative sum short of 1.
inline int sample_category(std::mt19937_64& rng, std::span<const double> probs) {
  const double u = uniform_unit(rng);
  double acc = 0.0;
  int last_positive = 0;
  for (int i = 0; i < static_cast<int>(probs.size()); ++i) {
    if (probs[i] > 0.0) last_positive = i;
    acc += probs[i];
    if (u < acc) return i;
  }
  return last_positive;
}

}  // namespace nashkit
