#pragma once

#include <cstdint>
#include <random>

namespace dnne {

/// Seedable PRNG used by every sampling path in the simulator.
///
/// Wraps std::mt19937_64, whose output sequence is fully specified by the
/// standard, so streams are bit-reproducible across platforms for a fixed
/// seed. Floating-point draws avoid std::uniform_real_distribution (whose
/// algorithm is implementation-defined) and instead map the top 53 bits of
/// the generator output onto [0,1).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1), 53-bit resolution.
    double next_double() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Bernoulli trial with success probability p.
    bool bernoulli(double p) { return next_double() < p; }

    /// Uniform integer in [0, n). n must be > 0.
    std::uint64_t next_below(std::uint64_t n) {
        // Rejection sampling to avoid modulo bias.
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % n;
    }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + next_double() * (hi - lo); }

private:
    std::mt19937_64 engine_;
};

/// Derive an independent stream seed from a base seed and a stream index.
/// Golden-ratio mixing keeps nearby indices decorrelated.
inline std::uint64_t stream_seed(std::uint64_t base, std::uint64_t index) {
    constexpr std::uint64_t kPhi = 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = base + (index + 1) * kPhi;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Exact Binomial(n, p) sample.
///
/// Distributionally identical to n independent Bernoulli(p) trials. Small n
/// is drawn trial-by-trial; large n uses inversion anchored at the mode with
/// the stable pmf ratio recurrence, so the cost is O(stddev) instead of O(n).
std::uint64_t binomial(std::uint64_t n, double p, Rng& rng);

} // namespace dnne
