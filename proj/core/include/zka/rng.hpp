#pragma once

#include <bit>
#include <cstdint>
#include <random>

#include "zka/errors.hpp"

namespace zka {

/// Seedable random source. All sampling goes through the raw mt19937_64
/// output stream, whose sequence is fixed by the standard, so a seed pins
/// every derived value bit-for-bit across platforms and runs.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform draw from [0, bound) by masked rejection.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw BadParameters("Rng::below: bound must be positive");
        if (bound == 1) return 0;
        std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(bound - 1);
        for (;;) {
            std::uint64_t v = engine_() & mask;
            if (v < bound) return v;
        }
    }

    /// Fair bit.
    unsigned bit() { return static_cast<unsigned>(engine_() & 1u); }

    /// Uniform double in [0, 1) with 53 bits of precision.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

}  // namespace zka
