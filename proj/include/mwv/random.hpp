#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace mwv {

using Rng = std::mt19937_64;

struct RngSeed {
  std::uint64_t value = 0;

  constexpr RngSeed() = default;
  constexpr explicit RngSeed(std::uint64_t v) : value(v) {}
  friend constexpr bool operator==(RngSeed, RngSeed) = default;
};

// splitmix64 finalizer; used to derive independent child seeds.
constexpr std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr RngSeed derive_seed(RngSeed base, std::uint64_t stream) {
  return RngSeed{mix_seed(base.value ^ mix_seed(stream + 0x632be59bd9b4e019ULL))};
}

inline Rng make_rng(RngSeed seed) { return Rng{mix_seed(seed.value)}; }

// FNV-1a, for turning names into seed streams.
constexpr std::uint64_t hash_name(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace mwv
