#include "dnne/rng.hpp"

#include <cmath>

namespace dnne {

namespace {

double log_pmf(std::uint64_t n, std::uint64_t k, double p) {
    const double nd = static_cast<double>(n);
    const double kd = static_cast<double>(k);
    return std::lgamma(nd + 1.0) - std::lgamma(kd + 1.0) - std::lgamma(nd - kd + 1.0)
           + kd * std::log(p) + (nd - kd) * std::log1p(-p);
}

} // namespace

std::uint64_t binomial(std::uint64_t n, double p, Rng& rng) {
    if (n == 0 || p <= 0.0) return 0;
    if (p >= 1.0) return n;

    if (n <= 256) {
        std::uint64_t c = 0;
        for (std::uint64_t i = 0; i < n; ++i)
            c += rng.bernoulli(p) ? 1 : 0;
        return c;
    }

    // Inversion from the mode. Candidates are visited in order
    // m, m-1, m+1, m-2, m+2, ... accumulating pmf mass until it covers u.
    const double q = 1.0 - p;
    std::uint64_t m = static_cast<std::uint64_t>((static_cast<double>(n) + 1.0) * p);
    if (m > n) m = n;

    const double u = rng.next_double();
    double cum = std::exp(log_pmf(n, m, p));
    if (u < cum) return m;

    // lo/hi walk outward; pmf maintained by the ratio recurrences
    //   pmf(k-1) = pmf(k) * k q / ((n-k+1) p)
    //   pmf(k+1) = pmf(k) * (n-k) p / ((k+1) q)
    double pmf_lo = cum;
    double pmf_hi = cum;
    std::uint64_t lo = m;
    std::uint64_t hi = m;
    bool lo_alive = true;
    bool hi_alive = true;
    while (lo_alive || hi_alive) {
        if (lo_alive) {
            if (lo == 0) {
                lo_alive = false;
            } else {
                pmf_lo *= (static_cast<double>(lo) * q)
                          / (static_cast<double>(n - lo + 1) * p);
                --lo;
                cum += pmf_lo;
                if (u < cum) return lo;
                if (pmf_lo < 1e-320) lo_alive = false;
            }
        }
        if (hi_alive) {
            if (hi == n) {
                hi_alive = false;
            } else {
                pmf_hi *= (static_cast<double>(n - hi) * p)
                          / (static_cast<double>(hi + 1) * q);
                ++hi;
                cum += pmf_hi;
                if (u < cum) return hi;
                if (pmf_hi < 1e-320) hi_alive = false;
            }
        }
    }
    // u fell into the ~1e-13 rounding slack beyond the accumulated mass.
    return hi;
}

} // namespace dnne
