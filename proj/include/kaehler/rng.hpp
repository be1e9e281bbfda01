#pragma once

#include <cstdint>
#include <random>

#include "kaehler/rational.hpp"

namespace kaehler {

/// Deterministic random source for property tests and generators. Bounded
/// draws use explicit rejection on top of the raw 64-bit stream so sequences
/// are identical across platforms and standard-library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}

    std::uint64_t next_u64() { return g_(); }

    /// Uniform in [0, bound). bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v = g_();
        while (v >= limit) v = g_();
        return v % bound;
    }

    /// Uniform in [lo, hi], inclusive.
    long long int_in(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    bool coin() { return (g_() & 1u) != 0; }

    /// Uniform nonzero integer in [-bound, bound].
    Rational nonzero_int(long long bound) {
        long long v = 0;
        while (v == 0) v = int_in(-bound, bound);
        return Rational(v);
    }

private:
    std::mt19937_64 g_;
};

}  // namespace kaehler
