#pragma once

#include <cstdint>
#include <initializer_list>

namespace nilo {

/// Deterministic 64-bit generator (splitmix64). Used instead of <random>
/// distributions so that identical seeds give identical streams on every
/// platform and standard library.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform value in [1, 65536]; the coefficient range for witness draws.
  std::uint64_t coefficient() { return 1 + (next() & 0xffff); }

  /// Uniform value in [0, n).
  std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
  std::uint64_t state_;
};

/// Folds words into a sub-stream seed, so per-task generators are independent
/// and reproducible from (seed, task identity).
inline std::uint64_t mix_seed(std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = 0x6a09e667f3bcc908ull;
  for (std::uint64_t w : parts) {
    SplitMix64 s(h ^ w);
    h = s.next();
  }
  return h;
}

}  // namespace nilo
