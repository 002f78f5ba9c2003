#pragma once

#include <cstdint>
#include <random>

namespace opflow {

/// Portable pseudo-random source used for all seeded test corpora.
///
/// State update is the 64-bit LCG  x <- 6364136223846793005 * x + 1442695040888963407
/// (mod 2^64), seeded with x = seed. An integer in [lo, hi] is drawn as
/// lo + ((x >> 32) mod (hi - lo + 1)) from the freshly advanced state. The
/// mapping deliberately avoids std::uniform_int_distribution, whose output
/// is implementation-defined.
class Lcg {
 public:
  using Engine = std::linear_congruential_engine<std::uint64_t, 6364136223846793005ULL,
                                                 1442695040888963407ULL, 0ULL>;

  explicit Lcg(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>((next() >> 32) % span);
  }

 private:
  Engine engine_;
};

}  // namespace opflow
