#pragma once

#include <cstdint>
#include <random>

namespace gqss {

/// Deterministic random stream shared by every sampling routine.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard, and the integer-to-double mapping is written out explicitly
/// below. std::uniform_real_distribution is implementation-defined and must
/// not be used anywhere in this library: the same seed has to produce the
/// same draws on every platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Raw 64-bit engine output.
    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1) built from the top 53 bits of one engine
    /// output. 53 bits fill the double mantissa exactly, so the result is
    /// one of 2^53 evenly spaced values.
    double next_double() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound). bound must be nonzero. Uses a plain
    /// modulo reduction; the bias is below 2^-13 for every bound accepted
    /// by this library (bound <= 4^20) and the mapping stays reproducible.
    std::uint64_t next_below(std::uint64_t bound) { return engine_() % bound; }

private:
    std::mt19937_64 engine_;
};

} // namespace gqss
