#pragma once

// Deterministic random generation for the verification suites. The mt19937_64
// engine is fully specified by the standard; the standard *distributions* are
// not, so uniforms are produced manually to keep reports byte-identical across
// platforms. Per-case seeds derive from the master seed and case index, so
// results do not depend on evaluation order.

#include <cstdint>
#include <random>

#include "core.hpp"

namespace trimoduli::rng {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::uint64_t bits() { return eng_(); }

    int sign() { return (eng_() & 1) ? 1 : -1; }

private:
    std::mt19937_64 eng_;
};

/// splitmix64 of (seed, index), used to derive independent per-case streams.
inline std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace trimoduli::rng
