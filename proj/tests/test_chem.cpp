#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dnne/chem.hpp"

#include <cmath>

using namespace dnne;
using namespace dnne::chem;

namespace {

EnzymeDose dose_for(double b, std::uint64_t t, std::uint64_t k) {
    // Weight b as an enzyme concentration: E = b * t * (1/k).
    return EnzymeDose{b * static_cast<double>(t) / static_cast<double>(k), false};
}

double ideal_product(double a, double b, const ErrorModel& err = {}) {
    auto sol = Solution::encode_fraction(Fraction(a), 1000, SampleMode::Ideal);
    return probe_readout(nick_site_b(sol, dose_for(b, 1000, 1), 1), err).fraction();
}

} // namespace

TEST_CASE("encode_fraction endpoints and deterministic split") {
    const auto none = Solution::encode_fraction(Fraction(0.0), 1000, SampleMode::Sampled, 1);
    CHECK(none.count(Species::Unnicked) == 1000);
    CHECK(none.count(Species::NickA) == 0);

    const auto all = Solution::encode_fraction(Fraction(1.0), 1000, SampleMode::Sampled, 1);
    CHECK(all.count(Species::NickA) == 1000);

    // The volumetric split is deterministic: exactly round(a*t) nicked.
    const auto s = Solution::encode_fraction(Fraction(0.37), 1'000'000,
                                             SampleMode::Sampled, 9);
    CHECK(s.count(Species::NickA) == 370000);
    s.check_closure();

    CHECK_THROWS_AS(Solution::encode_fraction(Fraction(0.5), 0, SampleMode::Ideal),
                    ArgumentError);
}

TEST_CASE("nick_site_b reproduces the four-species product table") {
    // a=0.5, b=0.5: all four species at 0.25.
    auto s = Solution::encode_fraction(Fraction(0.5), 1000, SampleMode::Ideal);
    s = nick_site_b(s, dose_for(0.5, 1000, 4), 4);
    for (Species sp : kAllSpecies)
        CHECK(s.fraction(sp) == doctest::Approx(0.25).epsilon(1e-14));

    // a=0.8, b=0.25: product table row by row.
    auto t = Solution::encode_fraction(Fraction(0.8), 1000, SampleMode::Ideal);
    t = nick_site_b(t, dose_for(0.25, 1000, 1), 1);
    CHECK(t.fraction(Species::NickAB) == doctest::Approx(0.8 * 0.25).epsilon(1e-13));
    CHECK(t.fraction(Species::NickA) == doctest::Approx(0.8 * 0.75).epsilon(1e-13));
    CHECK(t.fraction(Species::NickB) == doctest::Approx(0.2 * 0.25).epsilon(1e-13));
    CHECK(t.fraction(Species::Unnicked) == doctest::Approx(0.2 * 0.75).epsilon(1e-13));
    t.check_closure();

    // b=0 leaves the species untouched.
    auto u = Solution::encode_fraction(Fraction(0.3), 1000, SampleMode::Ideal);
    const auto before = u;
    u = nick_site_b(u, dose_for(0.0, 1000, 1), 1);
    for (Species sp : kAllSpecies)
        CHECK(u.fraction(sp) == before.fraction(sp));

    // Dose implying b > 1 signals an unrepresentable weight.
    auto v = Solution::encode_fraction(Fraction(0.3), 1000, SampleMode::Ideal);
    CHECK_THROWS_AS(nick_site_b(v, dose_for(1.2, 1000, 1), 1), DoseOverflowError);
}

TEST_CASE("probe readout yields the doubly nicked fraction") {
    auto s = Solution::encode_fraction(Fraction(0.5), 1'000'000, SampleMode::Ideal);
    s = nick_site_b(s, dose_for(0.5, 1'000'000, 1), 1);
    const auto pool = probe_readout(s);
    CHECK(pool.fraction() == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(pool.count() == doctest::Approx(250000.0).epsilon(1e-12));
    CHECK(pool.reference_total() == 1'000'000);

    // No doubly nicked molecules, no spurious reactions: empty pool.
    const auto empty = probe_readout(
        Solution::encode_fraction(Fraction(0.0), 1000, SampleMode::Ideal));
    CHECK(empty.count() == 0.0);

    // Error model arithmetic: eta*AB + delta*(non-AB).
    const ErrorModel err{0.95, 0.01};
    auto e = Solution::from_counts({60000, 20000, 0, 20000}, 5);
    const auto lossy = probe_readout(e, err);
    CHECK(lossy.count() == doctest::Approx(0.95 * 20000 + 0.01 * 80000));
    CHECK(lossy.count() == 19800.0);
}

TEST_CASE("error model validation") {
    CHECK_THROWS_AS((ErrorModel{0.0, 0.0}.validate()), ArgumentError);
    CHECK_THROWS_AS((ErrorModel{1.0, 1.0}.validate()), ArgumentError);
    CHECK_NOTHROW((ErrorModel{1.0, 0.0}.validate()));
}

TEST_CASE("error-model degeneracy: eta=1, delta=0 is bit-exact ideal") {
    Rng rng(12);
    for (int i = 0; i < 200; ++i) {
        const double a = rng.next_double();
        const double b = rng.next_double();
        CHECK(ideal_product(a, b, ErrorModel{1.0, 0.0}) == ideal_product(a, b));
    }
}

TEST_CASE("merge_pools averages fractions and conserves counts") {
    std::vector<SsdnaPool> pools;
    for (double f : {0.2, 0.0, 0.4, 0.2})
        pools.push_back(SsdnaPool::ideal(f, 1'000'000));
    const auto merged = merge_pools(pools);
    CHECK(merged.fraction() == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(merged.reference_total() == 4'000'000);

    // Two equal pools merge to the same fraction.
    std::vector<SsdnaPool> two = {SsdnaPool::ideal(0.5, 100), SsdnaPool::ideal(0.5, 100)};
    CHECK(merge_pools(two).fraction() == doctest::Approx(0.5).epsilon(1e-14));

    // k=1 is the identity.
    std::vector<SsdnaPool> one = {SsdnaPool::ideal(0.37, 1000)};
    CHECK(merge_pools(one).fraction() == 0.37);
    CHECK(merge_pools(one).reference_total() == 1000);

    // Mismatched reference totals are rejected.
    std::vector<SsdnaPool> bad = {SsdnaPool::ideal(0.1, 100), SsdnaPool::ideal(0.1, 200)};
    CHECK_THROWS_AS(merge_pools(bad), ArgumentError);

    // Sampled merge conserves counts exactly.
    std::vector<SsdnaPool> sampled = {SsdnaPool::sampled(123, 1000, 1),
                                      SsdnaPool::sampled(456, 1000, 2),
                                      SsdnaPool::sampled(7, 1000, 3)};
    const auto m = merge_pools(sampled);
    CHECK(m.count() == 123 + 456 + 7);
    CHECK(m.reference_total() == 3000);
}

TEST_CASE("seesaw activation is a step with threshold consumption") {
    ActivationParams p;
    p.threshold = 0.4;
    CHECK(seesaw_activation(Fraction(0.6), p).value() == 1.0);
    CHECK(seesaw_activation(Fraction(0.4), p).value() == 0.0); // x == theta
    CHECK(seesaw_activation(Fraction(0.3), p).value() == 0.0);
    CHECK(seesaw_activation(Fraction(1.0), p).value() == 1.0);
    CHECK(seesaw_activation(Fraction(0.0), p).value() == 0.0);

    // Limited replenishment turns the step into a capped linear ramp.
    p.replenishment_excess = false;
    p.gain = 10.0;
    CHECK(seesaw_activation(Fraction(0.45), p).value() ==
          doctest::Approx(0.5).epsilon(1e-12));
    CHECK(seesaw_activation(Fraction(0.9), p).value() == 1.0); // capped

    ActivationParams bad;
    bad.threshold = 0.0;
    CHECK_THROWS_AS(seesaw_activation(Fraction(0.5), bad), ArgumentError);
}

TEST_CASE("activation idempotence at cap 1") {
    Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        ActivationParams p;
        p.threshold = 0.01 + 0.98 * rng.next_double();
        const Fraction x(rng.next_double());
        const auto once = seesaw_activation(x, p);
        CHECK(seesaw_activation(once, p).value() == once.value());
    }
}

TEST_CASE("translate_to_enzyme is proportional with efficiency") {
    CHECK(translate_to_enzyme(Fraction(1.0), 1'000'000).concentration == 1e6);
    CHECK(translate_to_enzyme(Fraction(0.0), 1000).concentration == 0.0);
    const auto dose = translate_to_enzyme(Fraction(0.37), 100000, ErrorModel{0.9, 0.0});
    CHECK(dose.concentration == doctest::Approx(0.9 * 0.37 * 100000).epsilon(1e-14));
    CHECK(dose.concentration == doctest::Approx(33300.0).epsilon(1e-12));
    CHECK_FALSE(dose.tagged);
}

TEST_CASE("split_droplet: ideal proportionality and sampled conservation") {
    // k=1 identity.
    const auto s = Solution::encode_fraction(Fraction(0.25), 1'000'000, SampleMode::Ideal);
    const auto same = split_solution(s, 1, 0);
    CHECK(same.size() == 1);
    CHECK(same[0].fraction(Species::NickA) == s.fraction(Species::NickA));

    // Ideal split: four parts, same fraction, quarter molecules.
    const auto parts = split_solution(s, 4, 0);
    CHECK(parts.size() == 4);
    for (const auto& p : parts) {
        CHECK(p.total() == 250000);
        CHECK(p.fraction(Species::NickA) == 0.25);
    }

    // Sampled split: exact conservation plus a hypergeometric deviation bound.
    auto m = Solution::encode_fraction(Fraction(0.25), 1'000'000, SampleMode::Sampled, 77);
    const auto sp = split_solution(m, 4, 77);
    std::uint64_t total = 0, nicked = 0;
    for (const auto& p : sp) {
        total += p.total();
        nicked += p.count(Species::NickA);
        const double bound = 4.0 * std::sqrt(0.25 * 0.75 / 250000.0);
        CHECK(std::abs(p.fraction(Species::NickA) - 0.25) <= bound);
    }
    CHECK(total == 1'000'000);
    CHECK(nicked == m.count(Species::NickA));

    // Remainder spreads round-robin.
    const auto odd = split_solution(
        Solution::encode_fraction(Fraction(0.5), 10, SampleMode::Ideal), 3, 0);
    CHECK(odd[0].total() == 4);
    CHECK(odd[1].total() == 3);
    CHECK(odd[2].total() == 3);
}

TEST_CASE("multiplication correctness over random pairs (ideal)") {
    Rng rng(31337);
    for (int i = 0; i < 1000; ++i) {
        const double a = rng.next_double();
        const double b = rng.next_double();
        CHECK(std::abs(ideal_product(a, b) - a * b) <= 1e-12);
    }
}

TEST_CASE("multiplication convergence in sampled mode") {
    const std::uint64_t t = 1'000'000;
    Rng rng(281);
    int hits = 0;
    const int runs = 20;
    for (int i = 0; i < runs; ++i) {
        const double a = 0.05 + 0.9 * rng.next_double();
        const double b = 0.05 + 0.9 * rng.next_double();
        auto sol = Solution::encode_fraction(Fraction(a), t, SampleMode::Sampled,
                                             1000 + static_cast<std::uint64_t>(i));
        sol = nick_site_b(sol, dose_for(b, t, 1), 1);
        const double est = probe_readout(sol).fraction();
        const double bound =
            4.0 * std::sqrt(a * b * (1.0 - a * b) / static_cast<double>(t));
        if (std::abs(est - a * b) <= bound) ++hits;
    }
    CHECK(hits >= 19);
}

TEST_CASE("independent nicking in sampled mode (chi-square)") {
    const std::uint64_t t = 1'000'000;
    auto sol = Solution::encode_fraction(Fraction(0.5), t, SampleMode::Sampled, 4242);
    sol = nick_site_b(sol, dose_for(0.5, t, 1), 1);
    sol.check_closure();
    const double n = static_cast<double>(t);
    const double pa = (sol.fraction(Species::NickA) + sol.fraction(Species::NickAB));
    const double pb = (sol.fraction(Species::NickB) + sol.fraction(Species::NickAB));
    double chi2 = 0.0;
    const double obs[4] = {
        static_cast<double>(sol.count(Species::Unnicked)),
        static_cast<double>(sol.count(Species::NickA)),
        static_cast<double>(sol.count(Species::NickB)),
        static_cast<double>(sol.count(Species::NickAB)),
    };
    const double exp[4] = {
        n * (1 - pa) * (1 - pb),
        n * pa * (1 - pb),
        n * (1 - pa) * pb,
        n * pa * pb,
    };
    for (int i = 0; i < 4; ++i) chi2 += (obs[i] - exp[i]) * (obs[i] - exp[i]) / exp[i];
    // 1 degree of freedom; 10.83 is the 0.001 critical value.
    CHECK(chi2 <= 10.83);
}

TEST_CASE("species closure holds after random operation chains") {
    Rng rng(606);
    for (int i = 0; i < 100; ++i) {
        const double a = rng.next_double();
        const double b = rng.next_double();
        const auto mode = i % 2 == 0 ? SampleMode::Ideal : SampleMode::Sampled;
        auto sol = Solution::encode_fraction(Fraction(a), 10000, mode, rng.next_u64());
        sol = nick_site_b(sol, dose_for(b, 10000, 2), 2);
        sol.check_closure();
        for (const auto& part : split_solution(sol, 1 + i % 5, rng.next_u64()))
            part.check_closure();
    }
}

TEST_CASE("nick template constraints") {
    CHECK_NOTHROW(NickTemplate::checked("A", "B", 18));
    CHECK_THROWS_AS(NickTemplate::checked("A", "B", 19), ArgumentError);
    CHECK_THROWS_AS(NickTemplate::checked("A", "A", 10), ArgumentError);
    CHECK_THROWS_AS(NickTemplate::checked("", "B", 10), ArgumentError);
}
