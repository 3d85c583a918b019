#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dnne/ann.hpp"
#include "dnne/network_io.hpp"

#include <cmath>

using namespace dnne;
using namespace dnne::ann;

namespace {

FloatNetwork random_float_network(const std::vector<std::size_t>& sizes, Rng& rng,
                                  double weight_hi = 1.0, double theta_scale = 0.25) {
    FloatNetwork net;
    for (std::size_t l = 0; l + 1 < sizes.size(); ++l) {
        FloatLayer layer;
        layer.weights = Matrix(sizes[l + 1], sizes[l]);
        for (auto& w : layer.weights.data) w = rng.uniform(0.0, weight_hi);
        layer.thresholds.resize(sizes[l + 1]);
        for (auto& t : layer.thresholds)
            t = rng.uniform(0.05, theta_scale * weight_hi * sizes[l]);
        net.layers.push_back(std::move(layer));
    }
    return net;
}

std::vector<double> random_input(std::size_t n, Rng& rng) {
    std::vector<double> x(n);
    for (auto& v : x) v = rng.next_double();
    return x;
}

} // namespace

TEST_CASE("quantize: max-normalization and threshold rescaling") {
    FloatNetwork net;
    FloatLayer layer;
    layer.weights = Matrix(2, 4);
    for (auto& w : layer.weights.data) w = 0.5;
    layer.thresholds = {0.5 * 4 * 0.5, 1.0}; // first rescales to exactly 0.5
    net.layers.push_back(layer);

    const auto spec = quantize(net);
    CHECK(spec.layers[0].scale == 0.5);
    for (double w : spec.layers[0].weights.data) CHECK(w == 1.0);
    CHECK(spec.layers[0].thresholds[0] == doctest::Approx(0.5).epsilon(1e-14));

    // Negative weights are a constraint violation.
    FloatNetwork bad = net;
    bad.layers[0].weights.at(0, 0) = -0.1;
    CHECK_THROWS_AS(quantize(bad), ArgumentError);

    // All-zero matrix: scale undefined; documented fallback uses scale 1.
    FloatNetwork zero;
    FloatLayer zl;
    zl.weights = Matrix(2, 2);
    zl.thresholds = {0.5, 0.5};
    zero.layers.push_back(zl);
    CHECK_THROWS_AS(quantize(zero), QuantizationError);
    QuantizeOptions qo;
    qo.zero_scale_fallback = true;
    const auto fallback = quantize(zero, qo);
    CHECK(fallback.layers[0].scale == 1.0);

    // A threshold that rescales outside (0,1) is not representable.
    FloatNetwork wide = net;
    wide.layers[0].thresholds[1] = 10.0; // 10 / (4*0.5) = 5 > 1
    CHECK_THROWS_AS(quantize(wide), QuantizationError);
}

TEST_CASE("run_layer worked examples") {
    QuantizedLayer layer;
    layer.weights = Matrix(1, 4);
    for (auto& w : layer.weights.data) w = 1.0;
    layer.thresholds = {0.5};
    ExecOptions opts;
    opts.mode = Mode::FloatReference;

    // All ones: pre = (1/k) * k = 1, fires.
    const auto ones = run_layer(std::vector<double>(4, 1.0), layer, true, opts, 1);
    CHECK(ones.pre[0] == 1.0);
    CHECK(ones.out[0] == 1.0);

    // The merged-droplet example: mean of {0.2, 0, 0.4, 0.2} is 0.2.
    const std::vector<double> in = {0.2, 0.0, 0.4, 0.2};
    const auto mean = run_layer(in, layer, true, opts, 1);
    CHECK(mean.pre[0] == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(mean.out[0] == 0.0);

    CHECK_THROWS_AS(run_layer(std::vector<double>(3, 0.5), layer, true, opts, 1),
                    ArgumentError);
}

TEST_CASE("float reference and ideal chemistry agree bit for bit") {
    Rng rng(2718);
    for (int trial = 0; trial < 20; ++trial) {
        const auto net = random_float_network({16, 16, 4}, rng);
        const auto spec = quantize(net);
        ExecOptions float_opts;
        float_opts.mode = Mode::FloatReference;
        ExecOptions ideal_opts;
        ideal_opts.mode = Mode::IdealChemistry;
        device::DeviceConfig dev;
        dev.cells_per_side = 16;
        for (int s = 0; s < 5; ++s) {
            const auto x = random_input(16, rng);
            const auto rf = infer(spec, x, float_opts, dev);
            const auto ri = infer(spec, x, ideal_opts, dev);
            CHECK(rf.predicted == ri.predicted);
            for (std::size_t l = 0; l < rf.pre_activations.size(); ++l)
                for (std::size_t i = 0; i < rf.pre_activations[l].size(); ++i)
                    CHECK(std::abs(rf.pre_activations[l][i] -
                                   ri.pre_activations[l][i]) <= 1e-12);
        }
    }
}

TEST_CASE("sampled chemistry converges to ideal") {
    Rng rng(555);
    QuantizedLayer layer;
    layer.weights = Matrix(4, 8);
    for (auto& w : layer.weights.data) w = rng.uniform(0.1, 0.9);
    layer.thresholds.assign(4, 0.5);

    ExecOptions ideal;
    ideal.mode = Mode::IdealChemistry;
    ExecOptions sampled;
    sampled.mode = Mode::SampledChemistry;
    sampled.molecules = 1'000'000;
    sampled.seed = 33;

    const auto x = random_input(8, rng);
    const auto ri = run_layer(x, layer, true, ideal, 0);
    const auto rs = run_layer(x, layer, true, sampled, 0);
    const double bound = 4.0 * std::sqrt(0.25 / 1e6);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(std::abs(ri.pre[i] - rs.pre[i]) <= bound);
}

TEST_CASE("sampled pre-activation error shrinks like 1/sqrt(t)") {
    // Light version of the convergence-slope check (the acceptance suite
    // runs the full grid): mean error at t=1e3 must exceed t=1e5 by roughly
    // the factor 10 predicted by the binomial scaling.
    Rng rng(4821);
    QuantizedLayer layer;
    layer.weights = Matrix(4, 8);
    for (auto& w : layer.weights.data) w = rng.uniform(0.1, 0.9);
    layer.thresholds.assign(4, 0.5);
    const auto x = random_input(8, rng);

    ExecOptions ideal;
    ideal.mode = Mode::IdealChemistry;
    const auto ri = run_layer(x, layer, true, ideal, 0);

    auto mean_err = [&](std::uint64_t t) {
        double sum = 0.0;
        const int reps = 24;
        for (int r = 0; r < reps; ++r) {
            ExecOptions sampled;
            sampled.mode = Mode::SampledChemistry;
            sampled.molecules = t;
            sampled.seed = 100 + static_cast<std::uint64_t>(r);
            const auto rs = run_layer(x, layer, true, sampled, 0);
            for (std::size_t i = 0; i < 4; ++i) sum += std::abs(rs.pre[i] - ri.pre[i]);
        }
        return sum / (reps * 4);
    };
    const double e3 = mean_err(1000);
    const double e5 = mean_err(100000);
    CHECK(e3 / e5 > 5.0);
    CHECK(e3 / e5 < 20.0);
}

TEST_CASE("infer: tie-break, latency model, shape checks") {
    FloatNetwork net;
    FloatLayer l1;
    l1.weights = Matrix(4, 4);
    for (auto& w : l1.weights.data) w = 0.5;
    l1.thresholds.assign(4, 0.5);
    FloatLayer l2 = l1;
    net.layers = {l1, l2};
    const auto spec = quantize(net);

    ExecOptions opts;
    opts.mode = Mode::FloatReference;
    device::DeviceConfig dev;
    dev.cells_per_side = 196;

    // Zero input: nothing fires anywhere, class 0 by the documented rule.
    const auto r = infer(spec, std::vector<double>(4, 0.0), opts, dev);
    CHECK(r.predicted == 0);
    for (double o : r.outputs) CHECK(o == 0.0);

    CHECK_THROWS_AS(infer(spec, std::vector<double>(3, 0.0), opts, dev),
                    ArgumentError);

    // Latency rows per spec layer; a 784-784-10 plan on the 196-cell die.
    FloatNetwork big;
    FloatLayer h;
    h.weights = Matrix(784, 784);
    h.weights.data.assign(784 * 784, 0.001);
    h.thresholds.assign(784, 0.01);
    FloatLayer o;
    o.weights = Matrix(10, 784);
    o.weights.data.assign(10 * 784, 0.001);
    o.thresholds.assign(10, 0.01);
    big.layers = {h, o};
    const auto big_spec = quantize(big);
    const auto rb = infer(big_spec, std::vector<double>(784, 0.0), opts, dev);
    REQUIRE(rb.layer_latency_hours.size() == 3);
    CHECK(rb.layer_latency_hours[1] == doctest::Approx(14.17).epsilon(1e-9));
    CHECK(rb.layer_latency_hours[2] == doctest::Approx(8.07).epsilon(1e-9));
    CHECK(rb.latency_hours ==
          doctest::Approx(14.17 * 2 + 8.07).epsilon(1e-9));
}

TEST_CASE("training on a single-class toy set saturates") {
    io::Dataset toy;
    toy.count = 32;
    toy.dim = 8;
    Rng rng(11);
    toy.images.resize(toy.count * toy.dim);
    for (auto& v : toy.images) v = rng.uniform(0.5, 1.0);
    toy.labels.assign(toy.count, 3);

    std::vector<std::size_t> idx(toy.count);
    for (std::size_t i = 0; i < toy.count; ++i) idx[i] = i;
    Hyperparams hp;
    hp.epochs = 60;
    hp.batch_size = 8;
    const auto net = train(toy, idx, {8, 6, 10}, hp, 5);
    CHECK(net.min_weight() >= 0.0);
    CHECK(evaluate_accuracy(net, toy, idx) == 1.0);
}

TEST_CASE("training rejects unnormalized data") {
    io::Dataset bad;
    bad.count = 2;
    bad.dim = 2;
    bad.images = {0.5, 2.0, 0.1, 0.2};
    bad.labels = {0, 1};
    const std::vector<std::size_t> idx = {0, 1};
    Hyperparams hp;
    hp.epochs = 1;
    CHECK_THROWS_AS(train(bad, idx, {2, 2, 2}, hp, 1), ArgumentError);
}

TEST_CASE("surrogate gradient matches central differences") {
    Rng rng(90210);
    int checked = 0;
    while (checked < 40) {
        auto net = random_float_network({6, 5, 4}, rng, 0.5, 0.3);
        const auto x = random_input(6, rng);
        const int label = static_cast<int>(rng.next_below(4));
        const double slope = 6.0;
        const auto grad = surrogate_gradient(net, x, label, slope);

        // Probe one random weight and one random threshold per network.
        for (int probe = 0; probe < 2 && checked < 40; ++probe, ++checked) {
            const std::size_t l = rng.next_below(net.layers.size());
            auto& layer = net.layers[l];
            const bool weight = probe == 0;
            const std::size_t idx =
                weight ? rng.next_below(layer.weights.data.size())
                       : rng.next_below(layer.thresholds.size());
            double& p = weight ? layer.weights.data[idx] : layer.thresholds[idx];
            const double h = 3e-6;
            const double save = p;
            p = save + h;
            const double lp = surrogate_loss(net, x, label, slope);
            p = save - h;
            const double lm = surrogate_loss(net, x, label, slope);
            p = save;
            const double fd = (lp - lm) / (2 * h);
            const double an = weight ? grad.layers[l].weights.data[idx]
                                     : grad.layers[l].thresholds[idx];
            const double rel =
                std::abs(an - fd) / std::max({std::abs(an), std::abs(fd), 1e-6});
            CHECK(rel < 1e-4);
        }
    }
}

TEST_CASE("compare_modes: float vs ideal is exact agreement") {
    Rng rng(777);
    const auto net = random_float_network({16, 12, 4}, rng);
    const auto spec = quantize(net);

    io::Dataset data;
    data.count = 20;
    data.dim = 16;
    data.images.resize(data.count * data.dim);
    for (auto& v : data.images) v = rng.next_double();
    data.labels.assign(data.count, 0);
    std::vector<std::size_t> idx(data.count);
    for (std::size_t i = 0; i < data.count; ++i) idx[i] = i;

    ExecOptions base;
    base.molecules = 10000;
    base.seed = 3;
    const auto rows = compare_modes(spec, data, idx,
                                    {Mode::FloatReference, Mode::IdealChemistry}, base);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].agreement == 1.0);
    for (double d : rows[0].max_abs_pre_diff) CHECK(d <= 1e-12);

    const auto csv = compare_csv(rows);
    CHECK(csv.rfind("mode_a,mode_b,samples,agreement_rate,max_abs_pre_diff_layer1,"
                    "max_abs_pre_diff_layer2\n",
                    0) == 0);
    CHECK(csv.find("float,ideal,20,1.000000") != std::string::npos);

    CHECK_THROWS_AS(compare_modes(spec, data, idx, {Mode::FloatReference}, base),
                    ArgumentError);
}

TEST_CASE("step outputs stay in {0, cap}") {
    Rng rng(31);
    const auto net = random_float_network({8, 8, 4}, rng);
    const auto spec = quantize(net);
    ExecOptions opts;
    opts.mode = Mode::IdealChemistry;
    device::DeviceConfig dev;
    dev.cells_per_side = 8;
    for (int s = 0; s < 20; ++s) {
        const auto r = infer(spec, random_input(8, rng), opts, dev);
        for (double o : r.outputs) CHECK((o == 0.0 || o == 1.0));
    }
}
