#pragma once

#include <cstdint>
#include <random>

namespace bicomb {

/// Deterministic generator with cheap substream derivation.
///
/// Uniform doubles are built from the top 53 bits of the engine output so
/// sequences do not depend on the standard library's distribution code.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(mix(seed)) {}

    /// Independent generator for a named substream of this seed.
    [[nodiscard]] Rng split(std::uint64_t stream) const
    {
        return Rng(mix(seed_ ^ mix(stream + 0x632be59bd9b4e019ULL)));
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n)
    {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t r = 0;
        do {
            r = engine_();
        } while (r >= limit);
        return r % n;
    }

    std::uint64_t seed() const { return seed_; }

private:
    static std::uint64_t mix(std::uint64_t z)
    {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

/// Seed of substream `stream` of `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream)
{
    return Rng(seed).split(stream).seed();
}

}  // namespace bicomb
