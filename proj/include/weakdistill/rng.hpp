#pragma once

#include <cstdint>
#include <random>

namespace weakdistill {

/// Seedable per-index random stream.
///
/// Each stream is a std::mt19937_64 engine whose seed is derived from
/// (master_seed, index) with two rounds of the splitmix64 finalizer, so
/// streams with distinct indices are statistically independent and every
/// stream is reproducible on any platform (the engine and the derivation
/// are both fully specified). Uniform doubles come from the top 53 bits of
/// raw engine output, never from std::uniform_real_distribution, which the
/// standard leaves implementation-defined.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t index);

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53-bit resolution.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform on [-1, 1).
  double uniform_sym() { return 2.0 * uniform01() - 1.0; }

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 finalizer (Steele, Lea, Flood 2014).
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace weakdistill
