#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace linpoly {

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

// Seeded generator with platform-independent bounded draws. Named sub-streams
// are derived from the master seed so that reordering independent stages
// does not perturb each other's sequences.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = kDefaultSeed) : engine_(mix(seed)) {}

  static Rng stream(std::uint64_t master, std::string_view name) {
    std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
    for (unsigned char ch : name) {
      h ^= ch;
      h *= 0x100000001b3ULL;
    }
    return Rng(master ^ mix(h));
  }

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {  // splitmix64 finalizer
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::mt19937_64 engine_;
};

}  // namespace linpoly
