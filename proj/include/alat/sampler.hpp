#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <string_view>

namespace alat {

/// Counter-based deterministic random stream.
///
/// The stream is a pure function of (seed, counter); any (seed, counter)
/// pair reproduces the identical draw sequence on every run. Parallel
/// loops give each task its own sampler via stream(i) so results do not
/// depend on scheduling.
class SeededSampler {
public:
  explicit SeededSampler(std::uint64_t seed, std::uint64_t counter = 0)
      : seed_(seed), counter_(counter) {
    state_ = mix(mix(seed + 0x9E3779B97F4A7C15ULL) ^ mix(counter + 0xBF58476D1CE4E5B9ULL));
  }

  /// Derives a sampler keyed by a textual tag, so independent verification
  /// phases sharing one user seed draw decorrelated streams.
  static SeededSampler keyed(std::uint64_t seed, std::string_view tag,
                             std::uint64_t counter = 0) {
    std::uint64_t h = 0xCBF29CE484222325ULL;  // FNV-1a
    for (char c : tag) {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001B3ULL;
    }
    return SeededSampler(seed ^ h, counter);
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t counter() const { return counter_; }

  /// Independent sub-stream for sample index i.
  SeededSampler stream(std::uint64_t i) const { return SeededSampler(seed_, counter_ ^ mix(i + 1)); }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  /// Uniform double in (0, 1].
  double uniform() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller (pair cached for determinism).
  double gauss() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

  /// Standard complex normal (unit variance overall).
  std::complex<double> cgauss() {
    const double re = gauss();
    const double im = gauss();
    return {re * 0.7071067811865475244, im * 0.7071067811865475244};
  }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next_u64() % n; }

private:
  static std::uint64_t mix(std::uint64_t z) {  // splitmix64 finalizer
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::uint64_t counter_;
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace alat
