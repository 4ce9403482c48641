#ifndef STA_CORE_RANDOM_STREAM_HPP
#define STA_CORE_RANDOM_STREAM_HPP

#include <cstdint>
#include <random>

namespace sta {

// Seedable random stream used by every stochastic component.
//
// The generator is std::mt19937_64; the mappings from raw 64-bit draws to
// uniform/Gaussian variates are spelled out here rather than delegated to
// std::*_distribution, so a seed fully determines the draw sequence
// independent of the standard library in use. Two streams built from the
// same seed produce identical sequences. A stream is single-owner: never
// share one across concurrent tasks.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0,1), 53-bit resolution.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform on [-1,1).
    double uniform_sym() { return 2.0 * uniform01() - 1.0; }

    // Uniform on [low,high).
    double uniform(double low, double high) {
        return low + (high - low) * uniform01();
    }

    // Standard Gaussian via Box-Muller. Consumes two raw draws per call
    // (no cached spare, so the consumption pattern is position-independent).
    double gaussian() {
        const double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; // (0,1]
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    // Uniform index in [0,n).
    std::size_t uniform_index(std::size_t n) {
        const auto idx = static_cast<std::size_t>(uniform01() * static_cast<double>(n));
        return idx < n ? idx : n - 1;
    }

    // Child stream seeded from this stream's next raw draw. The engines use
    // this to keep operator randomness and acceptance coin flips on separate
    // streams with a fixed derivation order.
    RandomStream derive() { return RandomStream(next_u64()); }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace sta

#endif
