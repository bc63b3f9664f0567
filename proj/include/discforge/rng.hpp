#pragma once

#include <cstdint>
#include <random>

#include "discforge/rational.hpp"

namespace discforge {

// All randomness in the pipeline flows from a single user seed through
// std::mt19937_64 (bit-exact across platforms per the C++ standard).
// Range reduction uses mask-and-reject, so draws are exactly uniform.
class DetRng {
public:
    explicit DetRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform on [lo, hi], inclusive.
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t span = hi - lo;
        if (span == ~std::uint64_t(0)) return eng_();
        ++span;
        std::uint64_t mask = span - 1;
        mask |= mask >> 1; mask |= mask >> 2; mask |= mask >> 4;
        mask |= mask >> 8; mask |= mask >> 16; mask |= mask >> 32;
        std::uint64_t v;
        do { v = eng_() & mask; } while (v >= span);
        return lo + v;
    }

    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(uniform(0, std::uint64_t(hi - lo)));
    }

    // Small nonzero rational, suited to sample-point coordinates.
    Rat small_nonzero_rational(std::int64_t bound) {
        std::int64_t v = 0;
        while (v == 0) v = uniform_int(-bound, bound);
        return Rat(v);
    }

private:
    std::mt19937_64 eng_;
};

// SplitMix64; derives independent stream seeds from a master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace discforge
