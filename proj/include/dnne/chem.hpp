#pragma once

#include "dnne/fractional.hpp"
#include "dnne/rng.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dnne::chem {

/// Maximum distance between the two nicking sites for which the intermediate
/// fragment can still denature and be displaced by a probe strand.
inline constexpr int kMaxInterNickSpanBp = 18;

/// Template molecule description: two nicking sites within displacement
/// range, optionally carrying a magnetic bead for pull-down separation.
struct NickTemplate {
    std::string site_a = "A";
    std::string site_b = "B";
    int inter_nick_span_bp = kMaxInterNickSpanBp;
    bool has_magnetic_bead = true;

    static NickTemplate checked(std::string site_a, std::string site_b,
                                int inter_nick_span_bp,
                                bool has_magnetic_bead = true);
};

/// How molecule populations are represented.
///  Ideal   — exact real-valued species fractions (infinite-population limit)
///  Sampled — integer molecule counts with seeded stochastic reactions
enum class SampleMode { Ideal, Sampled };

/// The four template species, by nick configuration.
enum class Species : int { Unnicked = 0, NickA = 1, NickB = 2, NickAB = 3 };
inline constexpr std::array<Species, 4> kAllSpecies = {
    Species::Unnicked, Species::NickA, Species::NickB, Species::NickAB};

/// Fraction of intended reactions that complete (efficiency) and fraction of
/// unintended molecules that react anyway (spurious rate / leakage).
struct ErrorModel {
    double efficiency = 1.0;   // in (0, 1]
    double spurious_rate = 0.0; // in [0, 1)

    void validate() const;
};

/// Seesaw-gate step activation: threshold strands consume up to `threshold`
/// of the input; any residual drives the gate, which excess replenishment
/// amplifies to `output_cap`. With replenishment limited, amplification is
/// linear with slope `gain` instead.
struct ActivationParams {
    double threshold = 0.5;          // in (0, 1)
    double output_cap = 1.0;         // in (0, 1]
    bool replenishment_excess = true;
    double gain = 1e3;               // used only when replenishment is limited

    void validate() const;
};

/// Nicking-enzyme droplet; concentration is in molecules-per-droplet
/// equivalents. Tagged doses carry the magnetic-bead DNA tag.
struct EnzymeDose {
    double concentration = 0.0; // >= 0
    bool tagged = false;

    void validate() const;
};

/// A population of template molecules partitioned into the four nick
/// species. Ideal mode stores exact fractions; Sampled mode stores integer
/// counts plus the seed that drives its stochastic reactions.
class Solution {
public:
    /// Split-nick-mix encoding of `a` at site A. The volumetric split is
    /// deterministic: Sampled mode nicks exactly round(a*t) molecules.
    static Solution encode_fraction(Fraction a, std::uint64_t total, SampleMode mode,
                                    std::uint64_t seed = 0, NickTemplate tmpl = {});

    static Solution from_fractions(const std::array<double, 4>& fractions,
                                   std::uint64_t total, NickTemplate tmpl = {});
    static Solution from_counts(const std::array<std::uint64_t, 4>& counts,
                                std::uint64_t seed, NickTemplate tmpl = {});

    SampleMode mode() const noexcept { return mode_; }
    std::uint64_t total() const noexcept { return total_; }
    std::uint64_t seed() const noexcept { return seed_; }
    const NickTemplate& nick_template() const noexcept { return tmpl_; }

    double fraction(Species s) const;
    std::uint64_t count(Species s) const; // Sampled mode only
    const std::array<std::uint64_t, 4>& counts() const;

    /// Species closure: fractions sum to 1 (Ideal, 1e-12) or counts sum to
    /// total (Sampled, exact). Throws on violation.
    void check_closure() const;

private:
    SampleMode mode_ = SampleMode::Ideal;
    std::uint64_t total_ = 0;
    std::array<double, 4> frac_{};          // Ideal
    std::array<std::uint64_t, 4> count_{};  // Sampled
    std::uint64_t seed_ = 0;
    NickTemplate tmpl_;
};

/// Displaced-ssDNA population, measured against the template baseline it
/// came from (`reference_total`).
class SsdnaPool {
public:
    static SsdnaPool ideal(double fraction, std::uint64_t reference_total);
    static SsdnaPool sampled(double count, std::uint64_t reference_total,
                             std::uint64_t seed);

    SampleMode mode() const noexcept { return mode_; }
    double count() const noexcept;
    double fraction() const noexcept;
    std::uint64_t reference_total() const noexcept { return reference_total_; }
    std::uint64_t seed() const noexcept { return seed_; }

private:
    SampleMode mode_ = SampleMode::Ideal;
    double fraction_ = 0.0;        // primary in Ideal mode
    double count_ = 0.0;           // primary in Sampled mode (integer-valued)
    std::uint64_t reference_total_ = 0;
    std::uint64_t seed_ = 0;
};

/// Nick site B with probability b = E*k/t, independently of site A.
/// A-only molecules become AB, unnicked become B-only. Throws
/// DoseOverflowError when the implied b exceeds 1.
Solution nick_site_b(const Solution& s, const EnzymeDose& dose, std::uint64_t k);

/// Probe readout: gentle heat opens a toehold on doubly nicked molecules
/// and probe strands displace the spanning ssDNA. Yield is
/// efficiency*(AB) + spurious_rate*(non-AB); backbones and excess probes
/// leave via bead pull-down.
SsdnaPool probe_readout(const Solution& s, const ErrorModel& err = {});

/// Merge k droplets into one: counts add, the reference baseline multiplies
/// by k, so the merged fraction is the mean of the input fractions.
SsdnaPool merge_pools(std::span<const SsdnaPool> pools);
Solution merge_solutions(std::span<const Solution> solutions);

/// Step activation on a pool fraction (see ActivationParams).
Fraction seesaw_activation(Fraction x, const ActivationParams& p,
                           const ErrorModel& err = {});

/// Map output ssDNA one-to-one onto tagged enzyme, pull the surplus down,
/// and return the untagged dose: E = efficiency * out * reference_total.
EnzymeDose translate_to_enzyme(Fraction out, std::uint64_t reference_total,
                               const ErrorModel& err = {});

/// Break a droplet into k equal parts. Ideal parts copy the fraction;
/// Sampled parts draw a multivariate hypergeometric partition (counts
/// conserve exactly). Totals not divisible by k spread the remainder
/// round-robin from the first part.
std::vector<Solution> split_solution(const Solution& s, std::uint64_t k,
                                     std::uint64_t seed);
std::vector<SsdnaPool> split_pool(const SsdnaPool& pool, std::uint64_t k,
                                  std::uint64_t seed);

} // namespace dnne::chem
