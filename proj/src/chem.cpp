#include "dnne/chem.hpp"

#include <cmath>
#include <numeric>

namespace dnne::chem {

namespace {

// All count conversions round half-to-even so Sampled runs are
// platform-stable.
std::uint64_t round_half_even(double v) {
    if (v <= 0.0) return 0;
    return static_cast<std::uint64_t>(std::nearbyint(v));
}

// Partition `counts` into parts of the given sizes by drawing items without
// replacement (exact multivariate hypergeometric).
std::vector<std::array<std::uint64_t, 4>>
hypergeometric_partition(std::array<std::uint64_t, 4> remaining,
                         const std::vector<std::uint64_t>& part_sizes, Rng& rng) {
    std::vector<std::array<std::uint64_t, 4>> parts(part_sizes.size());
    std::uint64_t remaining_total =
        std::accumulate(remaining.begin(), remaining.end(), std::uint64_t{0});
    for (std::size_t p = 0; p < part_sizes.size(); ++p) {
        auto& part = parts[p];
        part.fill(0);
        if (p + 1 == part_sizes.size()) {
            part = remaining; // everything left belongs to the last part
            break;
        }
        for (std::uint64_t i = 0; i < part_sizes[p]; ++i) {
            std::uint64_t u = rng.next_below(remaining_total);
            for (std::size_t sp = 0; sp < 4; ++sp) {
                if (u < remaining[sp]) {
                    ++part[sp];
                    --remaining[sp];
                    break;
                }
                u -= remaining[sp];
            }
            --remaining_total;
        }
    }
    return parts;
}

std::vector<std::uint64_t> part_sizes_round_robin(std::uint64_t total, std::uint64_t k) {
    std::vector<std::uint64_t> sizes(k, total / k);
    for (std::uint64_t i = 0; i < total % k; ++i)
        ++sizes[i]; // remainder round-robin from the first part
    return sizes;
}

} // namespace

NickTemplate NickTemplate::checked(std::string site_a, std::string site_b,
                                   int inter_nick_span_bp, bool has_magnetic_bead) {
    if (site_a.empty() || site_b.empty() || site_a == site_b)
        throw ArgumentError("nick template needs two distinct, named sites");
    if (inter_nick_span_bp < 1 || inter_nick_span_bp > kMaxInterNickSpanBp)
        throw ArgumentError("inter-nick span " + std::to_string(inter_nick_span_bp) +
                            " bp outside displaceable range (1.." +
                            std::to_string(kMaxInterNickSpanBp) + ")");
    return NickTemplate{std::move(site_a), std::move(site_b), inter_nick_span_bp,
                        has_magnetic_bead};
}

void ErrorModel::validate() const {
    if (!(efficiency > 0.0 && efficiency <= 1.0))
        throw ArgumentError("efficiency must be in (0,1]");
    if (!(spurious_rate >= 0.0 && spurious_rate < 1.0))
        throw ArgumentError("spurious_rate must be in [0,1)");
}

void ActivationParams::validate() const {
    if (!(threshold > 0.0 && threshold < 1.0))
        throw ArgumentError("activation threshold must be in (0,1)");
    if (!(output_cap > 0.0 && output_cap <= 1.0))
        throw ArgumentError("activation output_cap must be in (0,1]");
    if (!(gain > 0.0))
        throw ArgumentError("activation gain must be > 0");
}

void EnzymeDose::validate() const {
    if (!(concentration >= 0.0))
        throw ArgumentError("enzyme concentration must be >= 0");
}

Solution Solution::encode_fraction(Fraction a, std::uint64_t total, SampleMode mode,
                                   std::uint64_t seed, NickTemplate tmpl) {
    if (total == 0)
        throw ArgumentError("solution needs at least one molecule");
    Solution s;
    s.mode_ = mode;
    s.total_ = total;
    s.seed_ = seed;
    s.tmpl_ = std::move(tmpl);
    if (mode == SampleMode::Ideal) {
        s.frac_ = {1.0 - a.value(), a.value(), 0.0, 0.0};
    } else {
        const std::uint64_t nicked =
            std::min(total, round_half_even(a.value() * static_cast<double>(total)));
        s.count_ = {total - nicked, nicked, 0, 0};
    }
    return s;
}

Solution Solution::from_fractions(const std::array<double, 4>& fractions,
                                  std::uint64_t total, NickTemplate tmpl) {
    if (total == 0)
        throw ArgumentError("solution needs at least one molecule");
    double sum = 0.0;
    for (double f : fractions) {
        if (!(f >= 0.0))
            throw ArgumentError("species fractions must be nonnegative");
        sum += f;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw ArgumentError("species fractions must sum to 1");
    Solution s;
    s.mode_ = SampleMode::Ideal;
    s.total_ = total;
    s.frac_ = fractions;
    s.tmpl_ = std::move(tmpl);
    return s;
}

Solution Solution::from_counts(const std::array<std::uint64_t, 4>& counts,
                               std::uint64_t seed, NickTemplate tmpl) {
    Solution s;
    s.mode_ = SampleMode::Sampled;
    s.total_ = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
    if (s.total_ == 0)
        throw ArgumentError("solution needs at least one molecule");
    s.count_ = counts;
    s.seed_ = seed;
    s.tmpl_ = std::move(tmpl);
    return s;
}

double Solution::fraction(Species sp) const {
    const auto i = static_cast<std::size_t>(sp);
    if (mode_ == SampleMode::Ideal) return frac_[i];
    return static_cast<double>(count_[i]) / static_cast<double>(total_);
}

std::uint64_t Solution::count(Species sp) const {
    if (mode_ != SampleMode::Sampled)
        throw ArgumentError("integer species counts exist only in Sampled mode");
    return count_[static_cast<std::size_t>(sp)];
}

const std::array<std::uint64_t, 4>& Solution::counts() const {
    if (mode_ != SampleMode::Sampled)
        throw ArgumentError("integer species counts exist only in Sampled mode");
    return count_;
}

void Solution::check_closure() const {
    if (mode_ == SampleMode::Ideal) {
        const double sum = frac_[0] + frac_[1] + frac_[2] + frac_[3];
        if (std::abs(sum - 1.0) > 1e-12)
            throw ArgumentError("species fractions drifted from 1: sum=" +
                                std::to_string(sum));
    } else {
        const std::uint64_t sum =
            std::accumulate(count_.begin(), count_.end(), std::uint64_t{0});
        if (sum != total_)
            throw ArgumentError("species counts do not sum to total");
    }
}

SsdnaPool SsdnaPool::ideal(double fraction, std::uint64_t reference_total) {
    if (reference_total == 0)
        throw ArgumentError("pool reference total must be positive");
    if (!(fraction >= 0.0 && fraction <= 1.0))
        throw ArgumentError("pool fraction out of [0,1]");
    SsdnaPool p;
    p.mode_ = SampleMode::Ideal;
    p.fraction_ = fraction;
    p.reference_total_ = reference_total;
    return p;
}

SsdnaPool SsdnaPool::sampled(double count, std::uint64_t reference_total,
                             std::uint64_t seed) {
    if (reference_total == 0)
        throw ArgumentError("pool reference total must be positive");
    if (!(count >= 0.0 && count <= static_cast<double>(reference_total)))
        throw ArgumentError("pool count out of [0, reference_total]");
    SsdnaPool p;
    p.mode_ = SampleMode::Sampled;
    p.count_ = count;
    p.reference_total_ = reference_total;
    p.seed_ = seed;
    return p;
}

double SsdnaPool::count() const noexcept {
    if (mode_ == SampleMode::Ideal)
        return fraction_ * static_cast<double>(reference_total_);
    return count_;
}

double SsdnaPool::fraction() const noexcept {
    if (mode_ == SampleMode::Ideal) return fraction_;
    return count_ / static_cast<double>(reference_total_);
}

Solution nick_site_b(const Solution& s, const EnzymeDose& dose, std::uint64_t k) {
    dose.validate();
    if (k == 0)
        throw ArgumentError("k must be >= 1");
    const double t = static_cast<double>(s.total());
    double b = dose.concentration * static_cast<double>(k) / t;
    if (b > 1.0 + 1e-9)
        throw DoseOverflowError("enzyme dose implies nicking probability " +
                                std::to_string(b) + " > 1");
    if (b > 1.0) b = 1.0;

    if (s.mode() == SampleMode::Ideal) {
        // Independent nicking at B: A-only molecules become AB, unnicked
        // become B-only; molecules already nicked at B are unchanged.
        const double u = s.fraction(Species::Unnicked);
        const double a_only = s.fraction(Species::NickA);
        std::array<double, 4> f = {
            u * (1.0 - b),
            a_only * (1.0 - b),
            s.fraction(Species::NickB) + u * b,
            s.fraction(Species::NickAB) + a_only * b,
        };
        return Solution::from_fractions(f, s.total(), s.nick_template());
    }

    // Per-molecule Bernoulli(b) over the not-yet-B-nicked molecules, drawn
    // as exact binomials per source species.
    Rng rng(stream_seed(s.seed(), 0x6e69636bULL)); // "nick"
    auto c = s.counts();
    const std::uint64_t from_unnicked = binomial(c[0], b, rng);
    const std::uint64_t from_a_only = binomial(c[1], b, rng);
    c[0] -= from_unnicked;
    c[1] -= from_a_only;
    c[2] += from_unnicked;
    c[3] += from_a_only;
    return Solution::from_counts(c, stream_seed(s.seed(), 0x6e657874ULL),
                                 s.nick_template());
}

SsdnaPool probe_readout(const Solution& s, const ErrorModel& err) {
    err.validate();
    if (s.nick_template().site_a.empty() || s.nick_template().site_b.empty())
        throw ArgumentError("readout needs a template with both sites defined");
    if (s.mode() == SampleMode::Ideal) {
        const double ab = s.fraction(Species::NickAB);
        const double f = err.efficiency * ab + err.spurious_rate * (1.0 - ab);
        return SsdnaPool::ideal(std::min(f, 1.0), s.total());
    }
    const double ab = static_cast<double>(s.count(Species::NickAB));
    const double rest = static_cast<double>(s.total()) - ab;
    const double count = static_cast<double>(
        round_half_even(err.efficiency * ab + err.spurious_rate * rest));
    return SsdnaPool::sampled(std::min(count, static_cast<double>(s.total())),
                              s.total(), stream_seed(s.seed(), 0x70726f62ULL));
}

SsdnaPool merge_pools(std::span<const SsdnaPool> pools) {
    if (pools.empty())
        throw ArgumentError("merge needs at least one pool");
    const std::uint64_t ref = pools.front().reference_total();
    const SampleMode mode = pools.front().mode();
    for (const auto& p : pools) {
        if (p.reference_total() != ref)
            throw ArgumentError("merged pools must share a reference total");
        if (p.mode() != mode)
            throw ArgumentError("merged pools must share a sample mode");
    }
    const auto k = static_cast<std::uint64_t>(pools.size());
    if (mode == SampleMode::Ideal) {
        double sum = 0.0;
        for (const auto& p : pools) sum += p.fraction();
        return SsdnaPool::ideal(std::min(sum / static_cast<double>(k), 1.0), ref * k);
    }
    double count = 0.0;
    for (const auto& p : pools) count += p.count();
    return SsdnaPool::sampled(count, ref * k,
                              stream_seed(pools.front().seed(), 0x6d657267ULL));
}

Solution merge_solutions(std::span<const Solution> solutions) {
    if (solutions.empty())
        throw ArgumentError("merge needs at least one solution");
    const std::uint64_t t = solutions.front().total();
    const SampleMode mode = solutions.front().mode();
    for (const auto& s : solutions) {
        if (s.total() != t)
            throw ArgumentError("merged solutions must share a molecule total");
        if (s.mode() != mode)
            throw ArgumentError("merged solutions must share a sample mode");
    }
    const auto k = static_cast<std::uint64_t>(solutions.size());
    if (mode == SampleMode::Ideal) {
        std::array<double, 4> f{};
        for (const auto& s : solutions)
            for (std::size_t i = 0; i < 4; ++i)
                f[i] += s.fraction(static_cast<Species>(i));
        for (auto& v : f) v /= static_cast<double>(k);
        return Solution::from_fractions(f, t * k, solutions.front().nick_template());
    }
    std::array<std::uint64_t, 4> c{};
    for (const auto& s : solutions)
        for (std::size_t i = 0; i < 4; ++i)
            c[i] += s.counts()[i];
    return Solution::from_counts(c, stream_seed(solutions.front().seed(), 0x6d657267ULL),
                                 solutions.front().nick_template());
}

Fraction seesaw_activation(Fraction x, const ActivationParams& p, const ErrorModel& err) {
    p.validate();
    err.validate();
    // Threshold strands consume min(x, threshold) at 1:1 stoichiometry; only
    // a strictly positive residual drives the gate. x == threshold leaves
    // nothing and yields 0.
    const double residual = x.value() - p.threshold;
    if (residual <= 0.0) return Fraction(0.0);
    if (p.replenishment_excess) return Fraction(p.output_cap);
    return Fraction::clamped(std::min(p.output_cap, p.gain * residual));
}

EnzymeDose translate_to_enzyme(Fraction out, std::uint64_t reference_total,
                               const ErrorModel& err) {
    err.validate();
    if (reference_total == 0)
        throw ArgumentError("reference total must be positive");
    return EnzymeDose{err.efficiency * out.value() * static_cast<double>(reference_total),
                      /*tagged=*/false};
}

std::vector<Solution> split_solution(const Solution& s, std::uint64_t k,
                                     std::uint64_t seed) {
    if (k == 0)
        throw ArgumentError("split needs k >= 1");
    if (k == 1) return {s};
    if (s.total() < k)
        throw ArgumentError("cannot split " + std::to_string(s.total()) +
                            " molecules into " + std::to_string(k) + " droplets");
    const auto sizes = part_sizes_round_robin(s.total(), k);
    std::vector<Solution> parts;
    parts.reserve(k);
    if (s.mode() == SampleMode::Ideal) {
        std::array<double, 4> f{};
        for (std::size_t i = 0; i < 4; ++i) f[i] = s.fraction(static_cast<Species>(i));
        for (std::uint64_t i = 0; i < k; ++i)
            parts.push_back(Solution::from_fractions(f, sizes[i], s.nick_template()));
        return parts;
    }
    Rng rng(stream_seed(seed, 0x73706c74ULL)); // "splt"
    auto part_counts = hypergeometric_partition(s.counts(), sizes, rng);
    for (std::uint64_t i = 0; i < k; ++i)
        parts.push_back(Solution::from_counts(part_counts[i], stream_seed(seed, i),
                                              s.nick_template()));
    return parts;
}

std::vector<SsdnaPool> split_pool(const SsdnaPool& pool, std::uint64_t k,
                                  std::uint64_t seed) {
    if (k == 0)
        throw ArgumentError("split needs k >= 1");
    if (k == 1) return {pool};
    if (pool.reference_total() < k)
        throw ArgumentError("cannot split a pool of reference " +
                            std::to_string(pool.reference_total()) + " into " +
                            std::to_string(k) + " droplets");
    const auto sizes = part_sizes_round_robin(pool.reference_total(), k);
    std::vector<SsdnaPool> parts;
    parts.reserve(k);
    if (pool.mode() == SampleMode::Ideal) {
        for (std::uint64_t i = 0; i < k; ++i)
            parts.push_back(SsdnaPool::ideal(pool.fraction(), sizes[i]));
        return parts;
    }
    // Two classes: displaced ssDNA vs the rest of the baseline.
    Rng rng(stream_seed(seed, 0x73706c74ULL));
    const auto ssdna = static_cast<std::uint64_t>(pool.count());
    std::array<std::uint64_t, 4> classes = {ssdna, pool.reference_total() - ssdna, 0, 0};
    auto part_counts = hypergeometric_partition(classes, sizes, rng);
    for (std::uint64_t i = 0; i < k; ++i)
        parts.push_back(SsdnaPool::sampled(static_cast<double>(part_counts[i][0]),
                                           sizes[i], stream_seed(seed, i)));
    return parts;
}

} // namespace dnne::chem
