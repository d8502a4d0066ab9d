#pragma once

#include <cstdint>

namespace alertval {

// SplitMix64. Chosen over std::mt19937 + distributions because the standard
// distributions are implementation-defined: run outputs must be byte-identical
// for a given seed on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform integer in [0, bound). bound must be > 0.
    std::uint64_t bounded(std::uint64_t bound) {
        // Lemire multiply-shift; bias is unmeasurable for bounds << 2^64.
        unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
        return static_cast<std::uint64_t>(m >> 64);
    }

    // Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    bool chance(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return uniform() < p;
    }

    // Derives an independent stream; used to give each purpose (topology,
    // traffic, claim levels, ...) its own sequence so adding draws to one
    // consumer never perturbs another.
    Rng fork(std::uint64_t tag) const {
        Rng mix(state_ ^ (0x632be59bd9b4e019ULL * (tag + 1)));
        return Rng(mix.next());
    }

private:
    std::uint64_t state_;
};

} // namespace alertval
