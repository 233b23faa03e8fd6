#pragma once

#include <cstdint>
#include <random>

namespace xint {

/// Seeded generator used by every randomized routine. The conversions are
/// written out by hand so a seed reproduces the same instance on any
/// standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform in [0, bound). `bound` must be positive.
  std::uint64_t below(std::uint64_t bound) {
    // rejection sampling keeps the distribution exact
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % bound;
  }

  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

  bool chance(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

/// Derive an independent stream seed for item `index` of a run seeded by `base`.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace xint
