#pragma once

#include <cmath>
#include <cstdint>

namespace cab {

// splitmix64 finalizer. Used both as a stand-alone bit mixer for seed
// derivation and to expand a single 64-bit seed into generator state.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic per-trial seed: mix the trial index through splitmix64,
// fold in the master seed, and mix once more. Any implementation that
// reproduces this mix (and the xoshiro256++/Box-Muller draws below) will
// reproduce our streams bit for bit.
inline std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) {
    std::uint64_t s = trial_index;
    std::uint64_t mixed = splitmix64_next(s);
    s = mixed ^ master_seed;
    return splitmix64_next(s);
}

// xoshiro256++ with a Box-Muller normal on top. We deliberately do not
// use std::normal_distribution: its draw sequence is implementation
// defined, which would break byte-identical traces across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t s = seed;
        for (auto& word : state_) word = splitmix64_next(s);
        spare_valid_ = false;
    }

    using result_type = std::uint64_t;
    static constexpr std::uint64_t min() { return 0; }
    static constexpr std::uint64_t max() { return ~0ULL; }

    std::uint64_t operator()() { return next(); }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform on [0,1), 53 significant bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller; one transcendental pair serves two draws.
    double normal() {
        if (spare_valid_) {
            spare_valid_ = false;
            return spare_;
        }
        // u1 in (0,1] so the log is finite.
        const double u1 = (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
        const double u2 = uniform01();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * 3.14159265358979323846 * u2;
        spare_ = radius * std::sin(angle);
        spare_valid_ = true;
        return radius * std::cos(angle);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4];
    double spare_ = 0.0;
    bool spare_valid_ = false;
};

}  // namespace cab
