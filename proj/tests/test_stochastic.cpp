#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dnne/stochastic.hpp"

#include <cmath>

using namespace dnne;
using namespace dnne::stoch;

namespace {

constexpr GateKind kBinaryGates[] = {GateKind::And, GateKind::Or,  GateKind::Nand,
                                     GateKind::Nor, GateKind::Xor, GateKind::Xnor};
constexpr GateKind kAllGates[] = {GateKind::Not,  GateKind::And, GateKind::Or,
                                  GateKind::Nand, GateKind::Nor, GateKind::Xor,
                                  GateKind::Xnor};

// Independent oracle: enumerate the Boolean input combinations and weight
// each by its probability.
double truth_table_expectation(GateKind g, double x, double y) {
    if (is_unary(g))
        return (1.0 - x) * (gate_truth(g, false) ? 1.0 : 0.0) +
               x * (gate_truth(g, true) ? 1.0 : 0.0);
    double e = 0.0;
    for (int i = 0; i <= 1; ++i)
        for (int j = 0; j <= 1; ++j) {
            const double p = (i ? x : 1.0 - x) * (j ? y : 1.0 - y);
            e += p * (gate_truth(g, i != 0, j != 0) ? 1.0 : 0.0);
        }
    return e;
}

} // namespace

TEST_CASE("gate algebra matches the worked examples") {
    CHECK(gate_eval(GateKind::And, Fraction(0.5), Fraction(0.5)).value() ==
          doctest::Approx(0.25).epsilon(1e-14));
    CHECK(gate_eval(GateKind::Not, Fraction(3.0 / 8.0)).value() ==
          doctest::Approx(5.0 / 8.0).epsilon(1e-14));
    CHECK(gate_eval(GateKind::Xor, Fraction(1.0), Fraction(1.0)).value() == 0.0);

    // OR(0.3, 0.4): brute force over the four Boolean pairs gives 0.58.
    const double oracle = truth_table_expectation(GateKind::Or, 0.3, 0.4);
    CHECK(oracle == doctest::Approx(0.58).epsilon(1e-14));
    CHECK(gate_eval(GateKind::Or, Fraction(0.3), Fraction(0.4)).value() ==
          doctest::Approx(oracle).epsilon(1e-13));
}

TEST_CASE("gate algebra equals the truth-table expectation on random inputs") {
    Rng rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        const double x = rng.next_double();
        const double y = rng.next_double();
        for (GateKind g : kAllGates) {
            const double expect = truth_table_expectation(g, x, y);
            const double got =
                is_unary(g)
                    ? gate_eval(g, Fraction(x)).value()
                    : gate_eval(g, Fraction(x), Fraction(y)).value();
            CHECK(std::abs(got - expect) <= 1e-12);
            CHECK(got >= 0.0); // range closure
            CHECK(got <= 1.0);
        }
    }
}

TEST_CASE("De Morgan forms are bit-exact compositions") {
    Rng rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const Fraction x(rng.next_double());
        const Fraction y(rng.next_double());
        CHECK(gate_eval(GateKind::Nand, x, y).value() ==
              gate_eval(GateKind::Not, gate_eval(GateKind::And, x, y)).value());
        CHECK(gate_eval(GateKind::Nor, x, y).value() ==
              gate_eval(GateKind::Not, gate_eval(GateKind::Or, x, y)).value());
        CHECK(gate_eval(GateKind::Xnor, x, y).value() ==
              gate_eval(GateKind::Not, gate_eval(GateKind::Xor, x, y)).value());
    }
}

TEST_CASE("arity is enforced") {
    CHECK_THROWS_AS(gate_eval(GateKind::Not, Fraction(0.5), Fraction(0.5)),
                    ArgumentError);
    CHECK_THROWS_AS(gate_eval(GateKind::And, Fraction(0.5)), ArgumentError);
}

TEST_CASE("fractions reject out-of-range values") {
    CHECK_THROWS_AS(Fraction(-0.01), ArgumentError);
    CHECK_THROWS_AS(Fraction(1.01), ArgumentError);
    CHECK(Fraction::clamped(1.0 + 1e-16).value() == 1.0);
}

TEST_CASE("bitstream encoding endpoints and determinism") {
    const auto zeros = Bitstream::encode(Fraction(0.0), 64, 1);
    CHECK(zeros.ones() == 0);
    const auto ones = Bitstream::encode(Fraction(1.0), 64, 1);
    CHECK(ones.ones() == 64);

    const auto a = Bitstream::encode(Fraction(0.3), 1000, 42);
    const auto b = Bitstream::encode(Fraction(0.3), 1000, 42);
    CHECK(a.bits() == b.bits());
    const auto c = Bitstream::encode(Fraction(0.3), 1000, 43);
    CHECK(a.bits() != c.bits());

    CHECK_THROWS_AS(Bitstream::encode(Fraction(0.5), 0, 1), ArgumentError);
}

TEST_CASE("bitstream empirical mean obeys the binomial bound") {
    const double x = 3.0 / 8.0;
    const std::size_t n = 100000;
    const auto s = Bitstream::encode(Fraction(x), n, 7);
    const double bound = 4.0 * std::sqrt(x * (1.0 - x) / static_cast<double>(n));
    CHECK(std::abs(s.mean() - x) <= bound);
}

TEST_CASE("gate application on bitstreams") {
    const auto ones = Bitstream::encode(Fraction(1.0), 256, 1);
    const auto all = gate_apply(GateKind::And, ones, &ones);
    CHECK(all.ones() == 256);

    // AND of independent 0.5 streams converges to 0.25.
    const std::size_t n = 100000;
    const auto s1 = Bitstream::encode(Fraction(0.5), n, 11);
    const auto s2 = Bitstream::encode(Fraction(0.5), n, 12);
    const auto prod = gate_apply(GateKind::And, s1, &s2);
    CHECK(std::abs(prod.mean() - 0.25) <=
          4.0 * std::sqrt(0.25 * 0.75 / static_cast<double>(n)));

    const auto short_stream = Bitstream::encode(Fraction(0.5), 10, 1);
    CHECK_THROWS_AS(gate_apply(GateKind::And, s1, &short_stream), ArgumentError);
    CHECK_THROWS_AS(gate_apply(GateKind::Not, s1, &s2), ArgumentError);
    CHECK_THROWS_AS(gate_apply(GateKind::Or, s1), ArgumentError);
}

TEST_CASE("exhaustive short streams match the truth table bit by bit") {
    // Every 4-bit pattern pair, every gate: output bit i must equal the
    // Boolean gate of the input bits i.
    for (unsigned pa = 0; pa < 16; ++pa)
        for (unsigned pb = 0; pb < 16; ++pb) {
            std::vector<std::uint8_t> ba(4), bb(4);
            for (unsigned i = 0; i < 4; ++i) {
                ba[i] = (pa >> i) & 1u;
                bb[i] = (pb >> i) & 1u;
            }
            const auto sa = Bitstream::from_bits(ba);
            const auto sb = Bitstream::from_bits(bb);
            for (GateKind g : kBinaryGates) {
                const auto out = gate_apply(g, sa, &sb);
                for (unsigned i = 0; i < 4; ++i)
                    CHECK(out.bit(i) == gate_truth(g, sa.bit(i), sb.bit(i)));
            }
            const auto inv = gate_apply(GateKind::Not, sa);
            for (unsigned i = 0; i < 4; ++i)
                CHECK(inv.bit(i) == !sa.bit(i));
        }
}

TEST_CASE("bitstream/algebra agreement across gates and seeds") {
    // 5 sigma bound with sigma^2 <= 0.25/n; checked over many fixed seeds.
    const std::size_t n = 10000;
    const double bound = 5.0 * std::sqrt(0.25 / static_cast<double>(n));
    Rng rng(314159);
    for (int trial = 0; trial < 100; ++trial) {
        const double x = rng.next_double();
        const double y = rng.next_double();
        const std::uint64_t seed = rng.next_u64();
        for (GateKind g : kAllGates) {
            const auto s1 = Bitstream::encode(Fraction(x), n, seed);
            const double expect = truth_table_expectation(g, x, y);
            double mean = 0.0;
            if (is_unary(g)) {
                mean = gate_apply(g, s1).mean();
            } else {
                const auto s2 = Bitstream::encode(Fraction(y), n, seed ^ 0xabcdef12ULL);
                mean = gate_apply(g, s1, &s2).mean();
            }
            CHECK(std::abs(mean - expect) <= bound);
        }
    }
}
