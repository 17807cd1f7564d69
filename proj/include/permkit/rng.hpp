#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace permkit::rng {

/// SplitMix64 step. Advances `state` and returns the next output.
inline constexpr std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Order-sensitive combine of two 64-bit values.
inline constexpr std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
  return splitmix64(s);
}

/// FNV-1a over the bytes of `s`.
std::uint64_t hash_bytes(std::string_view s);

/// Deterministic PRNG (xoshiro256**) with hand-rolled distributions so that
/// sequences are identical across platforms and standard libraries.
class Stream {
 public:
  explicit Stream(std::uint64_t seed);

  std::uint64_t next_u64();
  /// Uniform double in [0, 1).
  double next_double();
  /// Standard normal via Box-Muller; caches the spare draw.
  double next_gaussian();
  /// Uniform int in {0, ..., n-1}, unbiased (rejection sampling).
  int next_int(int n);
  /// Fisher-Yates shuffle of {0, ..., k-1}.
  std::vector<int> next_shuffled_identity(int k);

 private:
  std::uint64_t state_[4];
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Named substream of a master seed: `Stream(mix(seed, hash_bytes(name)))`.
Stream substream(std::uint64_t seed, std::string_view name);

/// One standard normal derived statelessly from a 64-bit key.
double gaussian_hash(std::uint64_t key);

}  // namespace permkit::rng
