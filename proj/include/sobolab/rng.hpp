#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sobolab {

// splitmix64: tiny, fast, and identical on every platform.  All randomness
// in the library flows through this generator; std:: distributions are
// avoided because their output is implementation-defined.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Uniform in [-1, 1).
  double next_signed() { return 2.0 * next_double() - 1.0; }

 private:
  std::uint64_t state_;
};

// Stable derivation of per-task seeds: hash the root seed together with a
// label so that independent cells get independent, reproducible streams.
inline std::uint64_t derive_seed(std::uint64_t root, const std::string& label) {
  std::uint64_t h = root ^ 0x6a09e667f3bcc908ULL;
  for (unsigned char ch : label) {
    h ^= ch;
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return SplitMix64(h).next_u64();
}

inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t salt) {
  return SplitMix64(root ^ (salt * 0x9e3779b97f4a7c15ULL)).next_u64();
}

}  // namespace sobolab
