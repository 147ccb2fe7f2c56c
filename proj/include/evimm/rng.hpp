#pragma once

// Reproducible uniform streams. A (master_seed, stream_index) pair fully
// determines a stream; distinct stream indices give independent substreams
// (stream keys are whitened through SplitMix64 before seeding the engine).
// Doubles are produced from raw engine output, so streams are bit-identical
// across platforms.

#include <cstdint>
#include <random>

namespace evimm {

struct SeedSpec {
    std::uint64_t master_seed = 0;
    std::uint64_t stream_index = 0;

    SeedSpec with_stream(std::uint64_t idx) const { return SeedSpec{master_seed, idx}; }
};

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class UniformStream {
  public:
    explicit UniformStream(SeedSpec seed) {
        std::uint64_t s = seed.master_seed;
        std::uint64_t a = splitmix64(s);
        s ^= 0x6a09e667f3bcc908ULL + seed.stream_index;
        std::uint64_t b = splitmix64(s);
        std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                          static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
        engine_.seed(seq);
    }

    // Uniform on the open interval (0, 1).
    double next() { return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53; }

    std::uint64_t next_raw() { return engine_(); }

  private:
    std::mt19937_64 engine_;
};

} // namespace evimm
