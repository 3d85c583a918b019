#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dnne/fluidics.hpp"

#include <algorithm>
#include <cmath>

using namespace dnne;
using namespace dnne::fluid;

namespace {

std::vector<EventKind> kinds_at(const Trace& t, int row, int col) {
    std::vector<EventKind> ks;
    for (const auto& e : t.events)
        if (e.row == row && e.col == col) ks.push_back(e.kind);
    return ks;
}

LayerRun run_simple_layer(const std::vector<double>& inputs,
                          const std::vector<std::vector<double>>& weights,
                          double theta, chem::SampleMode mode, std::uint64_t seed,
                          FaultInjection faults = {}) {
    chem::ActivationParams act;
    act.threshold = theta;
    return simulate_layer(inputs, weights, {act}, 1'000'000, mode, seed, {}, {},
                          faults);
}

} // namespace

TEST_CASE("single microcell protocol emits the six steps in order") {
    ArraySim sim(1);
    const auto dna = sim.add_droplet(
        chem::Solution::encode_fraction(Fraction(0.5), 1000, chem::SampleMode::Ideal));
    const auto enzyme = sim.add_droplet(chem::EnzymeDose{0.5 * 1000.0, false});
    const auto mixed = sim.run_microcell_protocol(0, 0, dna, enzyme, 1);

    const auto ks = kinds_at(sim.trace(), 0, 0);
    const std::vector<EventKind> expected = {
        EventKind::ValveRCloseLOpen, EventKind::DnaLoadLeft,
        EventKind::ValveLCloseROpen, EventKind::EnzymeLoadRight,
        EventKind::ValvesBothOpen,   EventKind::CoExitMix};
    CHECK(ks == expected);
    CHECK(!validate_trace(sim.trace()).has_value());

    // Mixed payload delegates to the chemistry: AB fraction a*b.
    const auto& sol = std::get<chem::Solution>(sim.droplet(mixed).payload);
    CHECK(sol.fraction(chem::Species::NickAB) == doctest::Approx(0.25).epsilon(1e-13));
}

TEST_CASE("microcell protocol rejects occupied slots and bad payloads") {
    ArraySim sim(1);
    const auto dna = sim.add_droplet(
        chem::Solution::encode_fraction(Fraction(0.5), 1000, chem::SampleMode::Ideal));
    const auto enzyme = sim.add_droplet(chem::EnzymeDose{100.0, false});
    sim.run_microcell_protocol(0, 0, dna, enzyme, 1);
    // The mixed droplet still waits at the cell; a second pair on the same
    // cell must be rejected until the row is merged.
    const auto d2 = sim.add_droplet(
        chem::Solution::encode_fraction(Fraction(0.1), 1000, chem::SampleMode::Ideal));
    const auto e2 = sim.add_droplet(chem::EnzymeDose{1.0, false});
    CHECK_THROWS_AS(sim.run_microcell_protocol(0, 0, d2, e2, 1), ProtocolError);

    // Swapped payload kinds are an argument error.
    ArraySim sim2(1);
    const auto d3 = sim2.add_droplet(
        chem::Solution::encode_fraction(Fraction(0.1), 1000, chem::SampleMode::Ideal));
    const auto e3 = sim2.add_droplet(chem::EnzymeDose{1.0, false});
    CHECK_THROWS_AS(sim2.run_microcell_protocol(0, 0, e3, d3, 1), ArgumentError);
}

TEST_CASE("load_array fills every cell with its assigned payloads") {
    const int k = 3;
    ArraySim sim(k);
    std::vector<std::int64_t> dna, enz;
    for (int i = 0; i < k * k; ++i) {
        dna.push_back(sim.add_droplet(chem::Solution::encode_fraction(
            Fraction((i + 1) / 10.0), 1000, chem::SampleMode::Ideal)));
        enz.push_back(sim.add_droplet(chem::EnzymeDose{10.0 * i, false}));
    }
    sim.load_array(dna, enz);
    CHECK(!validate_trace(sim.trace()).has_value());

    // Replay the log: the DnaLoadLeft/EnzymeLoadRight events must place the
    // row-major assignment exactly.
    for (const auto& e : sim.trace().events) {
        if (e.kind == EventKind::DnaLoadLeft)
            CHECK(e.droplet == dna[static_cast<std::size_t>(e.row) * k + e.col]);
        if (e.kind == EventKind::EnzymeLoadRight)
            CHECK(e.droplet == enz[static_cast<std::size_t>(e.row) * k + e.col]);
    }

    // Count mismatch is an argument error.
    ArraySim sim2(2);
    std::vector<std::int64_t> three;
    for (int i = 0; i < 3; ++i)
        three.push_back(sim2.add_droplet(chem::Solution::encode_fraction(
            Fraction(0.5), 1000, chem::SampleMode::Ideal)));
    CHECK_THROWS_AS(sim2.load_array(three, three), ArgumentError);
}

TEST_CASE("merge_row needs mixed cells and matches the chemistry oracle") {
    const std::vector<double> inputs = {0.2, 0.0, 0.4, 0.2};
    std::vector<std::vector<double>> unit(4, std::vector<double>(4, 1.0));
    const auto run = run_simple_layer(inputs, unit, 0.5, chem::SampleMode::Ideal, 1);
    // Every row merges the same inputs with unit weights: mean 0.2.
    for (double pre : run.pre_activation)
        CHECK(pre == doctest::Approx(0.2).epsilon(1e-13));
    CHECK(!validate_trace(run.trace).has_value());

    ArraySim sim(2);
    CHECK_THROWS_AS(sim.merge_row(0), ProtocolError);
}

TEST_CASE("merge phases out of order are flagged by the validator") {
    FaultInjection faults;
    faults.swap_merge_phases = true;
    const auto run = run_simple_layer({0.5, 0.5}, {{1.0, 1.0}, {1.0, 1.0}}, 0.4,
                                      chem::SampleMode::Ideal, 1, faults);
    const auto v = validate_trace(run.trace);
    REQUIRE(v.has_value());
    CHECK(v->rule == "merge-grammar");
}

TEST_CASE("skipped valve step breaks the microcell grammar") {
    FaultInjection faults;
    faults.skip_step = std::make_tuple(0, 0, 3);
    const auto run = run_simple_layer({0.5, 0.5}, {{1.0, 1.0}, {1.0, 1.0}}, 0.4,
                                      chem::SampleMode::Ideal, 1, faults);
    const auto v = validate_trace(run.trace);
    REQUIRE(v.has_value());
    CHECK(v->rule == "microcell-grammar");
}

TEST_CASE("double occupancy is caught") {
    FaultInjection faults;
    faults.double_occupy = std::make_pair(0, 0);
    const auto run = run_simple_layer({0.5, 0.5}, {{1.0, 1.0}, {1.0, 1.0}}, 0.4,
                                      chem::SampleMode::Ideal, 1, faults);
    const auto v = validate_trace(run.trace);
    REQUIRE(v.has_value());
    CHECK(v->rule == "slot-occupancy");
}

TEST_CASE("equal-path property: all merge arrivals share a timestamp") {
    const auto run = run_simple_layer({0.1, 0.2, 0.3, 0.4},
                                      std::vector<std::vector<double>>(
                                          4, std::vector<double>(4, 0.5)),
                                      0.4, chem::SampleMode::Ideal, 1);
    for (int row = 0; row < 4; ++row) {
        std::vector<double> arrivals;
        for (const auto& e : run.trace.events)
            if (e.kind == EventKind::MergeArrival && e.row == row)
                arrivals.push_back(e.time_s);
        REQUIRE(arrivals.size() == 4);
        for (double t : arrivals) CHECK(t == arrivals.front());
    }
}

TEST_CASE("reaction pipeline stages carry the timing constants") {
    device::TimingConstants timing;
    ArraySim sim(2, timing);
    std::vector<std::int64_t> dna, enz;
    for (int i = 0; i < 4; ++i) {
        dna.push_back(sim.add_droplet(chem::Solution::encode_fraction(
            Fraction(0.9), 1000, chem::SampleMode::Ideal)));
        enz.push_back(sim.add_droplet(chem::EnzymeDose{0.8 * 1000 / 2, false}));
    }
    sim.load_array(dna, enz);
    const auto merged = sim.merge_row(0);
    const double t0 = sim.clock_s();
    chem::ActivationParams act;
    act.threshold = 0.4;
    const auto out = sim.run_reaction_pipeline(merged, act);

    // Exactly 5 stage events, cumulative time = the activation stage sum.
    std::vector<const Event*> stages;
    for (const auto& e : sim.trace().events)
        if (e.kind == EventKind::PipelineDisplacement ||
            e.kind == EventKind::PipelineThreshold ||
            e.kind == EventKind::PipelineGate ||
            e.kind == EventKind::PipelineTranslation ||
            e.kind == EventKind::PipelineNick)
            stages.push_back(&e);
    REQUIRE(stages.size() == 5);
    const double span = stages.back()->time_s - t0;
    CHECK(span == doctest::Approx(timing.displacement_s + timing.threshold_s +
                                  timing.gate_s + timing.translation_s +
                                  timing.nick_s)
                      .epsilon(1e-12));

    // merged fraction 0.9*0.8 = 0.72 > 0.4 so the fresh droplet encodes 1.
    const auto& fresh = std::get<chem::Solution>(sim.droplet(out).payload);
    CHECK(fresh.fraction(chem::Species::NickA) == 1.0);
}

TEST_CASE("pipeline output encodes zero when the input is empty") {
    ArraySim sim(1);
    const auto dna = sim.add_droplet(
        chem::Solution::encode_fraction(Fraction(0.0), 1000, chem::SampleMode::Ideal));
    const auto enz = sim.add_droplet(chem::EnzymeDose{500.0, false});
    sim.run_microcell_protocol(0, 0, dna, enz, 1);
    const auto merged = sim.merge_row(0);
    chem::ActivationParams act;
    act.threshold = 0.4;
    const auto out = sim.run_reaction_pipeline(merged, act);
    const auto& fresh = std::get<chem::Solution>(sim.droplet(out).payload);
    CHECK(fresh.fraction(chem::Species::NickA) == 0.0);

    // Wrong payload kind for the pipeline.
    ArraySim sim2(1);
    const auto loose = sim2.add_droplet(chem::EnzymeDose{1.0, false});
    CHECK_THROWS_AS(sim2.run_reaction_pipeline(loose, act), ArgumentError);
}

TEST_CASE("separator conserves counts and emits evenly spaced droplets") {
    ArraySim sim(1);
    auto sol = chem::Solution::encode_fraction(Fraction(0.25), 1'000'000,
                                               chem::SampleMode::Sampled, 99);
    const auto id = sim.add_droplet(sol);
    const auto parts = sim.separate_droplet(id, 4, 99);
    REQUIRE(parts.size() == 4);
    std::uint64_t total = 0, nicked = 0;
    for (auto pid : parts) {
        const auto& p = std::get<chem::Solution>(sim.droplet(pid).payload);
        total += p.total();
        nicked += p.count(chem::Species::NickA);
    }
    CHECK(total == 1'000'000);
    CHECK(nicked == sol.count(chem::Species::NickA));

    std::vector<double> times;
    for (const auto& e : sim.trace().events)
        if (e.kind == EventKind::SeparationEmit) times.push_back(e.time_s);
    REQUIRE(times.size() == 4);
    for (std::size_t i = 1; i < times.size(); ++i)
        CHECK(times[i] - times[i - 1] ==
              doctest::Approx(times[1] - times[0]).epsilon(1e-12));

    // k=1 is the identity.
    ArraySim sim2(1);
    const auto one = sim2.add_droplet(sol);
    CHECK(sim2.separate_droplet(one, 1, 5).size() == 1);
}

TEST_CASE("event logs are byte-identical across identical runs") {
    for (auto mode : {chem::SampleMode::Ideal, chem::SampleMode::Sampled}) {
        const auto a = run_simple_layer({0.3, 0.6, 0.9}, {{0.2, 0.4, 0.8},
                                                          {0.1, 0.5, 0.9},
                                                          {1.0, 0.0, 0.5}},
                                        0.3, mode, 9001);
        const auto b = run_simple_layer({0.3, 0.6, 0.9}, {{0.2, 0.4, 0.8},
                                                          {0.1, 0.5, 0.9},
                                                          {1.0, 0.0, 0.5}},
                                        0.3, mode, 9001);
        CHECK(a.trace.to_text() == b.trace.to_text());
    }
}

TEST_CASE("trace text round-trips") {
    const auto run = run_simple_layer({0.5, 0.25}, {{1.0, 0.5}, {0.5, 1.0}}, 0.3,
                                      chem::SampleMode::Ideal, 3);
    const auto text = run.trace.to_text();
    const auto parsed = Trace::from_text(text);
    CHECK(parsed.to_text() == text);
    CHECK(parsed.events.size() == run.trace.events.size());
    CHECK_THROWS_AS(Trace::from_text("bogus"), FormatError);
}

TEST_CASE("fluidics payloads match the pure chemistry composition") {
    // Running the array and running the chem ops directly must agree to
    // 1e-12 (they agree exactly: the simulator delegates).
    const std::vector<double> inputs = {0.15, 0.8, 0.45, 0.6};
    const std::vector<std::vector<double>> weights = {{0.9, 0.2, 0.7, 0.1},
                                                      {0.3, 0.3, 0.3, 0.3},
                                                      {1.0, 1.0, 0.0, 0.0},
                                                      {0.5, 0.25, 0.125, 1.0}};
    const auto run = run_simple_layer(inputs, weights, 0.21, chem::SampleMode::Ideal, 1);
    for (std::size_t i = 0; i < weights.size(); ++i) {
        std::vector<chem::SsdnaPool> pools;
        for (std::size_t j = 0; j < inputs.size(); ++j) {
            auto sol = chem::Solution::encode_fraction(Fraction(inputs[j]), 1'000'000,
                                                       chem::SampleMode::Ideal);
            const chem::EnzymeDose dose{weights[i][j] * 1'000'000.0 / 4.0, false};
            pools.push_back(chem::probe_readout(chem::nick_site_b(sol, dose, 4)));
        }
        const double oracle = chem::merge_pools(pools).fraction();
        CHECK(std::abs(run.pre_activation[i] - oracle) <= 1e-12);
        chem::ActivationParams act;
        act.threshold = 0.21;
        CHECK(run.output[i] ==
              chem::seesaw_activation(Fraction::clamped(oracle), act).value());
    }
}

TEST_CASE("clock monotonicity over a full layer") {
    const auto run = run_simple_layer({0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5},
                                      std::vector<std::vector<double>>(
                                          8, std::vector<double>(8, 0.5)),
                                      0.3, chem::SampleMode::Ideal, 1);
    double prev = -1.0;
    for (const auto& e : run.trace.events) {
        CHECK(e.time_s >= prev);
        prev = e.time_s;
    }
}
