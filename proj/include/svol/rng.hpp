#pragma once

#include <cstdint>

namespace svol {

// Identifies one reproducible random stream. The same (master_seed,
// stream_index) always yields the same draws, on any platform and with any
// thread count; distinct stream indices give statistically independent
// streams.
struct SeedSpec {
    std::uint64_t master_seed = 0;
    std::uint64_t stream_index = 0;
};

// xoshiro256++ keyed by (master_seed, stream_index, substream). Substreams
// are used internally to give each Monte Carlo chunk its own stream.
class Rng {
  public:
    explicit Rng(SeedSpec seed, std::uint64_t substream = 0);

    std::uint64_t next_u64();

    // Strictly inside (0,1).
    double uniform01();

    // Exponential with the given rate (mean 1/rate), strictly positive.
    double exponential(double rate);

    // Standard normal via the inverse CDF; one uniform per draw.
    double normal();

  private:
    std::uint64_t s_[4];
};

} // namespace svol
