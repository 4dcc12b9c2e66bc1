#pragma once

#include <cstdint>
#include <random>

namespace gwalk {

/// Mixing function of SplitMix64. Used to derive independent seeds from a
/// master seed and a counter.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seed for stream `index` under `master`. Stream k is reproducible without
/// generating streams 0..k-1.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept {
    return splitmix64(master ^ splitmix64(index));
}

/// Repo-wide generator: mt19937_64, whose output sequence is fixed by the
/// C++ standard. The std:: distributions are implementation-defined, so the
/// bounded draws below are done by hand to keep results identical across
/// standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound). Modulo reduction with rejection of the
    /// biased low range.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = -bound % bound;
        std::uint64_t x = engine_();
        while (x < threshold) x = engine_();
        return x % bound;
    }

    /// True with probability p.
    bool bernoulli(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return uniform() < p;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace gwalk
