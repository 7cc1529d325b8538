#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>

namespace kidrank {

// Deterministic PRNG with a fixed cross-platform output sequence.
// std::uniform_*_distribution is implementation-defined, so every draw the
// toolkit makes (bootstrap sampling, bad-resource assignment, synthetic data
// in tests) goes through this instead.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n), n >= 1; Lemire's multiply-shift bounded draw
  std::uint64_t bounded(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<__uint128_t>(next()) * static_cast<__uint128_t>(n)) >> 64);
  }

  // uniform in [0, 1) with 53-bit resolution
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  // standard normal, Box-Muller on unit() draws
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u = 0.0;
    do {
      u = unit();
    } while (u <= 0.0);
    double v = unit();
    double r = std::sqrt(-2.0 * std::log(u));
    double a = 2.0 * std::numbers::pi * v;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  // decorrelated child stream, e.g. one per tree or per query
  SplitMix64 fork(std::uint64_t index) {
    SplitMix64 mix(state_ ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
    mix.next();
    return mix;
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

// FNV-1a, used for stable query hashing (fixture file names, train/test splits)
inline std::uint64_t fnv1a64(const std::string_view text) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

}  // namespace kidrank
