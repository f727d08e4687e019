#pragma once

#include <cstdint>
#include <random>

#include "simplicial/types.hpp"

namespace simplicial {

/// Mixes a base seed with a stream index so that independent substreams
/// (one per Monte-Carlo trial, probe batch, ...) can be derived
/// deterministically. SplitMix64 finalizer.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Seeded uniform generator. Uses the (fully specified, hence portable)
/// mt19937_64 engine with explicit bit-to-double mapping rather than
/// std::uniform_real_distribution, whose output is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1) with 53 bits of precision.
    scalar_t uniform01() {
        return static_cast<scalar_t>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi).
    scalar_t uniform(scalar_t lo, scalar_t hi) {
        return lo + (hi - lo) * uniform01();
    }

    /// Vector with i.i.d. uniform entries in [lo, hi).
    vector_t uniform_vector(index_t n, scalar_t lo, scalar_t hi) {
        vector_t v(n);
        for (index_t i = 0; i < n; ++i) v[i] = uniform(lo, hi);
        return v;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace simplicial
