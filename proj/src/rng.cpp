#include "svol/rng.hpp"

#include "svol/normal.hpp"

#include <cmath>

namespace svol {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t splitmix_next(std::uint64_t& state) {
    state += kGolden;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

} // namespace

Rng::Rng(SeedSpec seed, std::uint64_t substream) {
    std::uint64_t st = seed.master_seed;
    splitmix_next(st);
    st += kGolden * (seed.stream_index + 1);
    splitmix_next(st);
    st += kGolden * (substream + 1);
    s_[0] = splitmix_next(st);
    s_[1] = splitmix_next(st);
    s_[2] = splitmix_next(st);
    s_[3] = splitmix_next(st);
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0)
        s_[0] = kGolden;
}

std::uint64_t Rng::next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Rng::uniform01() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::exponential(double rate) { return -std::log(uniform01()) / rate; }

double Rng::normal() { return inverse_normal_cdf(uniform01()); }

} // namespace svol
