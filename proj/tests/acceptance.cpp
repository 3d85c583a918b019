// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Each criterion pins its tolerances in code.

#include "dnne/ann.hpp"
#include "dnne/chem.hpp"
#include "dnne/dataset.hpp"
#include "dnne/device.hpp"
#include "dnne/fluidics.hpp"
#include "dnne/stochastic.hpp"
#include "dnne/trace.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace dnne;

namespace {

int g_failures = 0;

void criterion(const std::string& name, const std::function<bool(std::string&)>& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %-28s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", name.c_str(), secs,
                detail.empty() ? "" : " ", detail.c_str());
    if (!ok) ++g_failures;
}

bool check(bool cond, std::string& detail, const std::string& msg) {
    if (!cond && detail.empty()) detail = msg;
    return cond;
}

double truth_table_expectation(stoch::GateKind g, double x, double y) {
    if (stoch::is_unary(g))
        return (1.0 - x) * (stoch::gate_truth(g, false) ? 1.0 : 0.0) +
               x * (stoch::gate_truth(g, true) ? 1.0 : 0.0);
    double e = 0.0;
    for (int i = 0; i <= 1; ++i)
        for (int j = 0; j <= 1; ++j)
            e += (i ? x : 1 - x) * (j ? y : 1 - y) *
                 (stoch::gate_truth(g, i != 0, j != 0) ? 1.0 : 0.0);
    return e;
}

// ---- criterion 1: gate algebra --------------------------------------------

bool gate_algebra(std::string& detail) {
    using stoch::GateKind;
    const GateKind gates[] = {GateKind::Not,  GateKind::And, GateKind::Or,
                              GateKind::Nand, GateKind::Nor, GateKind::Xor,
                              GateKind::Xnor};
    Rng rng(101);
    bool ok = true;
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        const double x = rng.next_double();
        const double y = rng.next_double();
        for (GateKind g : gates) {
            const double want = truth_table_expectation(g, x, y);
            const double got =
                stoch::is_unary(g)
                    ? stoch::gate_eval(g, Fraction(x)).value()
                    : stoch::gate_eval(g, Fraction(x), Fraction(y)).value();
            ok &= check(std::abs(got - want) <= 1e-12, detail,
                        std::string("gate ") + stoch::gate_name(g) + " off at x=" +
                            std::to_string(x));
        }
    }
    // Bitstream convergence at n = 1e5 under the binomial bound.
    const std::size_t n = 100000;
    Rng seeds(555);
    for (int trial = 0; trial < 20 && ok; ++trial) {
        const double x = seeds.next_double();
        const double y = seeds.next_double();
        const std::uint64_t seed = seeds.next_u64();
        for (GateKind g : gates) {
            const auto s1 = stoch::Bitstream::encode(Fraction(x), n, seed);
            double mean = 0.0, want = truth_table_expectation(g, x, y);
            if (stoch::is_unary(g)) {
                mean = stoch::gate_apply(g, s1).mean();
            } else {
                const auto s2 =
                    stoch::Bitstream::encode(Fraction(y), n, seed ^ 0x5a5a5a5aULL);
                mean = stoch::gate_apply(g, s1, &s2).mean();
            }
            // 5 sigma with the worst-case Bernoulli variance 1/4.
            const double bound = 5.0 * std::sqrt(0.25 / static_cast<double>(n));
            ok &= check(std::abs(mean - want) <= bound, detail,
                        std::string("bitstream mean for ") + stoch::gate_name(g));
        }
    }
    return ok;
}

// ---- criterion 2: multiplication ------------------------------------------

bool multiplication(std::string& detail) {
    bool ok = true;
    Rng rng(202);
    for (int i = 0; i < 1000 && ok; ++i) {
        const double a = rng.next_double();
        const double b = rng.next_double();
        auto sol = chem::Solution::encode_fraction(Fraction(a), 1000,
                                                   chem::SampleMode::Ideal);
        const chem::EnzymeDose dose{b * 1000.0, false};
        const double got = chem::probe_readout(chem::nick_site_b(sol, dose, 1)).fraction();
        ok &= check(std::abs(got - a * b) <= 1e-12, detail,
                    "ideal product off at a=" + std::to_string(a));
    }

    const std::uint64_t t = 1'000'000;
    int hits = 0;
    Rng pair_rng(203);
    for (int run = 0; run < 20; ++run) {
        const double a = 0.05 + 0.9 * pair_rng.next_double();
        const double b = 0.05 + 0.9 * pair_rng.next_double();
        auto sol = chem::Solution::encode_fraction(
            Fraction(a), t, chem::SampleMode::Sampled, 9000 + static_cast<std::uint64_t>(run));
        const chem::EnzymeDose dose{b * static_cast<double>(t), false};
        const double est = chem::probe_readout(chem::nick_site_b(sol, dose, 1)).fraction();
        const double bound = 4.0 * std::sqrt(a * b * (1 - a * b) / static_cast<double>(t));
        if (std::abs(est - a * b) <= bound) ++hits;
    }
    ok &= check(hits >= 19, detail,
                "sampled convergence: only " + std::to_string(hits) + "/20 in bound");
    return ok;
}

// ---- criterion 3: published design table ----------------------------------

bool design_table(std::string& detail) {
    bool ok = true;
    const auto rows = device::explore(device::paper_configs(), {784, 784, 10});
    const double pess[4] = {553.19, 34.57, 3.69, 0.23};
    const double opti[4] = {3.84, 0.24, 0.03, 0.002};
    const double hrs[4] = {14.17, 38.6, 105.6, 404.6};
    const std::uint64_t ser[4] = {4, 16, 49, 196};
    for (int i = 0; i < 4; ++i) {
        ok &= check(std::abs(rows[i].area_pessimistic_cm2 - pess[i]) <= 0.01, detail,
                    rows[i].config_name + " pessimistic area");
        const double tol = i == 3 ? 0.001 : 0.01;
        ok &= check(std::abs(rows[i].area_optimistic_cm2 - opti[i]) <= tol, detail,
                    rows[i].config_name + " optimistic area");
        ok &= check(std::abs(rows[i].exec_time_per_layer_hr - hrs[i]) <= 0.1, detail,
                    rows[i].config_name + " latency");
        ok &= check(rows[i].serialization_input == ser[i], detail,
                    rows[i].config_name + " serialization");
        ok &= check(rows[i].serialization_hidden == ser[i], detail,
                    rows[i].config_name + " hidden serialization");
    }
    ok &= check(rows[3].serialization_output == 3, detail, "Config-4 output factor");
    const double single =
        device::layer_latency_hours({784, 784}, device::TimingConstants{});
    ok &= check(std::abs(single - 8.07) <= 0.01, detail, "784x784 single-layer latency");
    return ok;
}

// ---- criterion 4: fluidics protocol ----------------------------------------

bool fluidics_protocol(std::string& detail) {
    bool ok = true;
    for (int k : {1, 2, 4, 8}) {
        std::vector<double> inputs(static_cast<std::size_t>(k));
        std::vector<std::vector<double>> weights(
            static_cast<std::size_t>(k), std::vector<double>(static_cast<std::size_t>(k)));
        Rng rng(40 + static_cast<std::uint64_t>(k));
        for (auto& v : inputs) v = rng.next_double();
        for (auto& row : weights)
            for (auto& w : row) w = rng.next_double();
        chem::ActivationParams act;
        act.threshold = 0.3;

        const auto run = fluid::simulate_layer(inputs, weights, {act}, 100000,
                                               chem::SampleMode::Ideal, 17);
        ok &= check(!fluid::validate_trace(run.trace).has_value(), detail,
                    "k=" + std::to_string(k) + " valid run rejected");

        // Byte-identical logs for identical runs (sampled mode, same seed).
        const auto s1 = fluid::simulate_layer(inputs, weights, {act}, 10000,
                                              chem::SampleMode::Sampled, 23);
        const auto s2 = fluid::simulate_layer(inputs, weights, {act}, 10000,
                                              chem::SampleMode::Sampled, 23);
        ok &= check(s1.trace.to_text() == s2.trace.to_text(), detail,
                    "k=" + std::to_string(k) + " log not reproducible");

        // Payload commutativity with the pure chemistry composition.
        for (std::size_t i = 0; i < weights.size() && ok; ++i) {
            std::vector<chem::SsdnaPool> pools;
            for (std::size_t j = 0; j < inputs.size(); ++j) {
                auto sol = chem::Solution::encode_fraction(Fraction(inputs[j]), 100000,
                                                           chem::SampleMode::Ideal);
                const chem::EnzymeDose dose{
                    weights[i][j] * 100000.0 / static_cast<double>(k), false};
                pools.push_back(chem::probe_readout(
                    chem::nick_site_b(sol, dose, static_cast<std::uint64_t>(k))));
            }
            const double oracle = chem::merge_pools(pools).fraction();
            ok &= check(std::abs(run.pre_activation[i] - oracle) <= 1e-12, detail,
                        "k=" + std::to_string(k) + " payload drifted from chemistry");
        }

        // Fault-injected runs must fail validation.
        fluid::FaultInjection skip;
        skip.skip_step = std::make_tuple(0, 0, 3);
        fluid::FaultInjection dup;
        dup.double_occupy = std::make_pair(0, 0);
        fluid::FaultInjection swap;
        swap.swap_merge_phases = true;
        for (const auto& fault : {skip, dup, swap}) {
            const auto broken = fluid::simulate_layer(inputs, weights, {act}, 10000,
                                                      chem::SampleMode::Ideal, 17, {},
                                                      {}, fault);
            ok &= check(fluid::validate_trace(broken.trace).has_value(), detail,
                        "k=" + std::to_string(k) + " fault not caught");
        }
    }
    return ok;
}

// ---- criterion 5: activation ------------------------------------------------

bool activation(std::string& detail) {
    bool ok = true;
    Rng rng(505);
    for (int i = 0; i < 100 && ok; ++i) {
        chem::ActivationParams p;
        p.threshold = 0.01 + 0.97 * rng.next_double();
        const double eps = 1e-9;
        ok &= check(chem::seesaw_activation(Fraction(0.0), p).value() == 0.0, detail,
                    "x=0 must not fire");
        ok &= check(chem::seesaw_activation(Fraction(p.threshold - eps), p).value() == 0.0,
                    detail, "x=theta-eps must not fire");
        ok &= check(chem::seesaw_activation(Fraction(p.threshold), p).value() == 0.0,
                    detail, "x=theta must not fire");
        ok &= check(chem::seesaw_activation(Fraction(p.threshold + eps), p).value() == 1.0,
                    detail, "x=theta+eps must fire");
        ok &= check(chem::seesaw_activation(Fraction(1.0), p).value() == 1.0, detail,
                    "x=1 must fire");
        const auto once = chem::seesaw_activation(Fraction(rng.next_double()), p);
        ok &= check(chem::seesaw_activation(once, p).value() == once.value(), detail,
                    "activation not idempotent");
    }
    return ok;
}

// ---- criterion 6: end-to-end desk-scale network -----------------------------

bool end_to_end(std::string& detail) {
    const auto& ds = io::builtin_digits();
    const auto split = io::split_indices(ds.count, 0.2, 7);
    ann::Hyperparams hp; // defaults pinned in the header
    const auto fnet = ann::train(ds, split.train, {64, 64, 10}, hp, 7);

    bool ok = check(fnet.min_weight() >= 0.0, detail, "negative weight after training");

    const double acc = ann::evaluate_accuracy(fnet, ds, split.test);
    ok &= check(acc >= 0.90, detail,
                "held-out accuracy " + std::to_string(acc) + " < 0.90");

    const auto spec = ann::quantize(fnet);
    std::vector<std::size_t> eval(split.test.begin(),
                                  split.test.begin() +
                                      std::min<std::size_t>(200, split.test.size()));
    ann::ExecOptions base;
    base.molecules = 100000;
    base.seed = 11;
    const auto rows = ann::compare_modes(
        spec, ds, eval,
        {ann::Mode::FloatReference, ann::Mode::IdealChemistry,
         ann::Mode::SampledChemistry},
        base);
    for (const auto& r : rows) {
        if (r.mode_a == "float" && r.mode_b == "ideal")
            ok &= check(r.agreement == 1.0, detail,
                        "float/ideal agreement " + std::to_string(r.agreement));
        if (r.mode_a == "ideal" && r.mode_b == "sampled")
            ok &= check(r.agreement >= 0.95, detail,
                        "ideal/sampled agreement " + std::to_string(r.agreement));
    }
    if (detail.empty())
        detail = "accuracy=" + std::to_string(acc);
    return ok;
}

// ---- criterion 7: convergence slope -----------------------------------------

bool convergence_slope(std::string& detail) {
    Rng rng(707);
    ann::QuantizedLayer layer;
    layer.weights = ann::Matrix(8, 8);
    for (auto& w : layer.weights.data) w = rng.uniform(0.1, 0.9);
    layer.thresholds.assign(8, 0.5);
    std::vector<double> x(8);
    for (auto& v : x) v = rng.uniform(0.1, 0.9);

    ann::ExecOptions ideal;
    ideal.mode = ann::Mode::IdealChemistry;
    const auto ri = ann::run_layer(x, layer, true, ideal, 0);

    const std::uint64_t grid[4] = {1000, 10000, 100000, 1'000'000};
    std::vector<double> log_t, log_err;
    for (std::uint64_t t : grid) {
        double sum = 0.0;
        const int reps = 32;
        for (int r = 0; r < reps; ++r) {
            ann::ExecOptions sampled;
            sampled.mode = ann::Mode::SampledChemistry;
            sampled.molecules = t;
            sampled.seed = 1000 + static_cast<std::uint64_t>(r);
            const auto rs = ann::run_layer(x, layer, true, sampled, 0);
            for (std::size_t i = 0; i < 8; ++i)
                sum += std::abs(rs.pre[i] - ri.pre[i]);
        }
        log_t.push_back(std::log10(static_cast<double>(t)));
        log_err.push_back(std::log10(sum / (reps * 8)));
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const int n = 4;
    for (int i = 0; i < n; ++i) {
        sx += log_t[i];
        sy += log_err[i];
        sxx += log_t[i] * log_t[i];
        sxy += log_t[i] * log_err[i];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    detail = "slope=" + std::to_string(slope);
    return std::abs(slope - (-0.5)) <= 0.1;
}

// ---- criterion 8: gradient check --------------------------------------------

bool gradient_check(std::string& detail) {
    Rng rng(808);
    bool ok = true;
    int checked = 0;
    while (checked < 100 && ok) {
        ann::FloatNetwork net;
        const std::size_t sizes[3] = {6, 5, 4};
        for (int l = 0; l < 2; ++l) {
            ann::FloatLayer layer;
            layer.weights = ann::Matrix(sizes[l + 1], sizes[l]);
            for (auto& w : layer.weights.data) w = rng.uniform(0.0, 0.5);
            layer.thresholds.resize(sizes[l + 1]);
            for (auto& t : layer.thresholds) t = rng.uniform(0.05, 1.0);
            net.layers.push_back(std::move(layer));
        }
        std::vector<double> x(6);
        for (auto& v : x) v = rng.next_double();
        const int label = static_cast<int>(rng.next_below(4));
        const double slope = 6.0;
        const auto grad = ann::surrogate_gradient(net, x, label, slope);
        for (int probe = 0; probe < 4 && checked < 100; ++probe, ++checked) {
            const std::size_t l = rng.next_below(2);
            auto& layer = net.layers[l];
            const bool is_weight = probe % 2 == 0;
            const std::size_t idx = is_weight
                                        ? rng.next_below(layer.weights.data.size())
                                        : rng.next_below(layer.thresholds.size());
            double& p = is_weight ? layer.weights.data[idx] : layer.thresholds[idx];
            const double save = p;
            const double h = 3e-6;
            p = save + h;
            const double lp = ann::surrogate_loss(net, x, label, slope);
            p = save - h;
            const double lm = ann::surrogate_loss(net, x, label, slope);
            p = save;
            const double fd = (lp - lm) / (2 * h);
            const double an = is_weight ? grad.layers[l].weights.data[idx]
                                        : grad.layers[l].thresholds[idx];
            const double rel =
                std::abs(an - fd) / std::max({std::abs(an), std::abs(fd), 1e-6});
            ok &= check(rel < 1e-4, detail,
                        "gradient mismatch rel=" + std::to_string(rel));
        }
    }
    return ok;
}

} // namespace

int main() {
    criterion("gate-algebra", gate_algebra);
    criterion("multiplication", multiplication);
    criterion("design-table", design_table);
    criterion("fluidics-protocol", fluidics_protocol);
    criterion("activation", activation);
    criterion("end-to-end", end_to_end);
    criterion("convergence-slope", convergence_slope);
    criterion("gradient-check", gradient_check);
    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
