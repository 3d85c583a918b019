#include "dnne/ann.hpp"

#include "dnne/errors.hpp"
#include "dnne/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace dnne::ann {

std::vector<std::size_t> FloatNetwork::layer_sizes() const {
    std::vector<std::size_t> sizes;
    if (layers.empty()) return sizes;
    sizes.push_back(layers.front().weights.cols);
    for (const auto& l : layers) sizes.push_back(l.weights.rows);
    return sizes;
}

double FloatNetwork::min_weight() const {
    double m = 0.0;
    bool first = true;
    for (const auto& l : layers)
        for (double w : l.weights.data) {
            if (first || w < m) m = w;
            first = false;
        }
    return m;
}

void NetworkSpec::validate() const {
    if (layers.empty() || layer_sizes.size() != layers.size() + 1)
        throw ArgumentError("network layer sizes do not chain");
    for (std::size_t l = 0; l < layers.size(); ++l) {
        const auto& layer = layers[l];
        if (layer.weights.cols != layer_sizes[l] || layer.weights.rows != layer_sizes[l + 1])
            throw ArgumentError("layer " + std::to_string(l) + " shape mismatch");
        if (layer.thresholds.size() != layer.weights.rows)
            throw ArgumentError("layer " + std::to_string(l) + " threshold count mismatch");
        for (double w : layer.weights.data)
            if (!(w >= 0.0 && w <= 1.0))
                throw ArgumentError("layer " + std::to_string(l) +
                                    " has a weight outside [0,1]");
        for (double t : layer.thresholds)
            if (!(t > 0.0 && t < 1.0))
                throw ArgumentError("layer " + std::to_string(l) +
                                    " has a threshold outside (0,1)");
        if (!(layer.scale > 0.0))
            throw ArgumentError("layer " + std::to_string(l) + " scale must be > 0");
    }
}

const char* mode_name(Mode m) {
    switch (m) {
        case Mode::FloatReference: return "float";
        case Mode::IdealChemistry: return "ideal";
        case Mode::SampledChemistry: return "sampled";
        case Mode::FullFluidics: return "fluidics";
    }
    return "?";
}

std::optional<Mode> mode_from_name(const std::string& name) {
    if (name == "float") return Mode::FloatReference;
    if (name == "ideal") return Mode::IdealChemistry;
    if (name == "sampled") return Mode::SampledChemistry;
    if (name == "fluidics") return Mode::FullFluidics;
    return std::nullopt;
}

namespace {

double step(double pre, double theta, double cap) {
    return pre > theta ? cap : 0.0;
}

LayerResult run_layer_float(std::span<const double> x, const QuantizedLayer& layer,
                            bool apply_step, double cap) {
    const auto k = layer.weights.cols;
    LayerResult r;
    r.pre.resize(layer.weights.rows);
    r.out.resize(layer.weights.rows);
    for (std::size_t i = 0; i < layer.weights.rows; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < k; ++j) acc += x[j] * layer.weights.at(i, j);
        const double pre = acc / static_cast<double>(k);
        r.pre[i] = pre;
        r.out[i] = apply_step ? step(pre, layer.thresholds[i], cap) : pre;
    }
    return r;
}

LayerResult run_layer_chem(std::span<const double> x, const QuantizedLayer& layer,
                           bool apply_step, const ExecOptions& opts,
                           std::uint64_t layer_seed, chem::SampleMode sample_mode) {
    const auto k = layer.weights.cols;
    const auto t = opts.molecules;
    LayerResult r;
    r.pre.resize(layer.weights.rows);
    r.out.resize(layer.weights.rows);
    std::vector<chem::SsdnaPool> pools;
    pools.reserve(k);
    for (std::size_t i = 0; i < layer.weights.rows; ++i) {
        pools.clear();
        for (std::size_t j = 0; j < k; ++j) {
            auto sol = chem::Solution::encode_fraction(
                Fraction(x[j]), t, sample_mode, stream_seed(layer_seed, i * k + j));
            const chem::EnzymeDose dose{layer.weights.at(i, j) * static_cast<double>(t) /
                                            static_cast<double>(k),
                                        false};
            pools.push_back(
                chem::probe_readout(chem::nick_site_b(sol, dose, k), opts.err));
        }
        const auto merged = chem::merge_pools(pools);
        const double pre = merged.fraction();
        r.pre[i] = pre;
        if (apply_step) {
            chem::ActivationParams act;
            act.threshold = layer.thresholds[i];
            act.output_cap = opts.output_cap;
            r.out[i] = chem::seesaw_activation(Fraction::clamped(pre), act, opts.err)
                           .value();
        } else {
            r.out[i] = pre;
        }
    }
    return r;
}

LayerResult run_layer_fluidics(std::span<const double> x, const QuantizedLayer& layer,
                               bool apply_step, const ExecOptions& opts,
                               std::uint64_t layer_seed) {
    std::vector<std::vector<double>> w(layer.weights.rows,
                                       std::vector<double>(layer.weights.cols));
    for (std::size_t i = 0; i < layer.weights.rows; ++i)
        for (std::size_t j = 0; j < layer.weights.cols; ++j)
            w[i][j] = layer.weights.at(i, j);
    std::vector<chem::ActivationParams> acts(layer.weights.rows);
    for (std::size_t i = 0; i < acts.size(); ++i) {
        acts[i].threshold = layer.thresholds[i];
        acts[i].output_cap = opts.output_cap;
    }
    const auto mode = chem::SampleMode::Sampled;
    auto run = fluid::simulate_layer(std::vector<double>(x.begin(), x.end()), w, acts,
                                     opts.molecules, mode, layer_seed, {}, opts.err);
    LayerResult r;
    r.pre = run.pre_activation;
    r.out = apply_step ? run.output : run.pre_activation;
    r.trace = std::move(run.trace);
    return r;
}

} // namespace

LayerResult run_layer(std::span<const double> inputs, const QuantizedLayer& layer,
                      bool apply_step, const ExecOptions& opts,
                      std::uint64_t layer_seed) {
    if (inputs.size() != layer.weights.cols)
        throw ArgumentError("input length " + std::to_string(inputs.size()) +
                            " does not match layer width " +
                            std::to_string(layer.weights.cols));
    for (double v : inputs)
        if (!(v >= 0.0 && v <= 1.0))
            throw ArgumentError("layer inputs must lie in [0,1]");
    switch (opts.mode) {
        case Mode::FloatReference:
            return run_layer_float(inputs, layer, apply_step, opts.output_cap);
        case Mode::IdealChemistry:
            return run_layer_chem(inputs, layer, apply_step, opts, layer_seed,
                                  chem::SampleMode::Ideal);
        case Mode::SampledChemistry:
            return run_layer_chem(inputs, layer, apply_step, opts, layer_seed,
                                  chem::SampleMode::Sampled);
        case Mode::FullFluidics:
            return run_layer_fluidics(inputs, layer, apply_step, opts, layer_seed);
    }
    throw ArgumentError("unknown execution mode");
}

InferenceResult infer(const NetworkSpec& net, std::span<const double> input,
                      const ExecOptions& opts, const device::DeviceConfig& dev) {
    net.validate();
    dev.validate();
    if (input.size() != net.layer_sizes.front())
        throw ArgumentError("input length does not match the network input layer");

    InferenceResult result;
    std::vector<double> x(input.begin(), input.end());
    for (std::size_t l = 0; l < net.layers.size(); ++l) {
        const bool is_output = l + 1 == net.layers.size();
        const bool apply_step =
            !is_output || net.output_readout == OutputReadout::Step;
        auto lr = run_layer(x, net.layers[l], apply_step, opts,
                            stream_seed(opts.seed, l));
        result.pre_activations.push_back(lr.pre);
        if (lr.trace && opts.capture_traces)
            result.traces.push_back(std::move(*lr.trace));
        x = lr.out;
    }
    result.outputs = x;
    result.predicted = static_cast<int>(
        std::max_element(x.begin(), x.end()) - x.begin()); // ties -> lowest index

    for (auto size : net.layer_sizes) {
        const device::LayerPlan plan{size, static_cast<std::uint64_t>(dev.cells_per_side)};
        result.layer_latency_hours.push_back(device::layer_latency_hours(plan, dev.timing));
    }
    result.latency_hours = std::accumulate(result.layer_latency_hours.begin(),
                                           result.layer_latency_hours.end(), 0.0);
    return result;
}

NetworkSpec quantize(const FloatNetwork& net, const QuantizeOptions& opts) {
    if (net.layers.empty())
        throw ArgumentError("cannot quantize an empty network");
    NetworkSpec spec;
    spec.layer_sizes = net.layer_sizes();
    spec.output_readout = opts.output_readout;
    double input_scale = opts.input_scale;
    for (std::size_t l = 0; l < net.layers.size(); ++l) {
        const auto& fl = net.layers[l];
        if (fl.thresholds.size() != fl.weights.rows)
            throw ArgumentError("layer " + std::to_string(l) + " threshold count mismatch");
        double scale = 0.0;
        for (double w : fl.weights.data) {
            if (w < 0.0)
                throw ArgumentError("layer " + std::to_string(l) +
                                    " has a negative weight; the engine encodes "
                                    "nonnegative weights only");
            scale = std::max(scale, w);
        }
        if (scale == 0.0) {
            if (!opts.zero_scale_fallback)
                throw QuantizationError("layer " + std::to_string(l) +
                                        " is all-zero; scale undefined");
            scale = 1.0;
        }
        QuantizedLayer ql;
        ql.scale = scale;
        ql.weights = Matrix(fl.weights.rows, fl.weights.cols);
        for (std::size_t i = 0; i < fl.weights.data.size(); ++i)
            ql.weights.data[i] = fl.weights.data[i] / scale;
        ql.thresholds.resize(fl.thresholds.size());
        const double k = static_cast<double>(fl.weights.cols);
        for (std::size_t i = 0; i < fl.thresholds.size(); ++i) {
            const double theta = fl.thresholds[i] / (k * scale * input_scale);
            if (!(theta > 0.0 && theta < 1.0))
                throw QuantizationError(
                    "layer " + std::to_string(l) + " neuron " + std::to_string(i) +
                    ": rescaled threshold " + std::to_string(theta) +
                    " outside (0,1); layer not representable");
            ql.thresholds[i] = theta;
        }
        spec.layers.push_back(std::move(ql));
        input_scale = 1.0; // step outputs are in {0, cap} with cap <= 1
    }
    spec.validate();
    return spec;
}

void Hyperparams::validate() const {
    if (epochs < 1) throw ArgumentError("epochs must be >= 1");
    if (batch_size < 1) throw ArgumentError("batch_size must be >= 1");
    if (!(learning_rate > 0.0)) throw ArgumentError("learning_rate must be > 0");
    if (!(surrogate_slope > 0.0)) throw ArgumentError("surrogate_slope must be > 0");
    if (!(weight_init > 0.0)) throw ArgumentError("weight_init must be > 0");
    if (!(theta_min > 0.0)) throw ArgumentError("theta_min must be > 0");
}

namespace {

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

struct Activations {
    std::vector<std::vector<double>> a; // post-sigmoid per layer
};

Activations forward_surrogate(const FloatNetwork& net, std::span<const double> input,
                              double slope) {
    Activations acts;
    std::vector<double> x(input.begin(), input.end());
    for (const auto& layer : net.layers) {
        std::vector<double> next(layer.weights.rows);
        for (std::size_t i = 0; i < layer.weights.rows; ++i) {
            double z = 0.0;
            for (std::size_t j = 0; j < layer.weights.cols; ++j)
                z += layer.weights.at(i, j) * x[j];
            next[i] = sigmoid(slope * (z - layer.thresholds[i]));
        }
        acts.a.push_back(next);
        x = std::move(next);
    }
    return acts;
}

// Backprop for the per-output BCE loss under the steep-sigmoid surrogate.
// delta at the output is slope * (a - y); hidden deltas chain through
// W^T delta * slope * a * (1 - a).
FloatNetwork backward_surrogate(const FloatNetwork& net, std::span<const double> input,
                                int label, double slope, const Activations& acts) {
    FloatNetwork grad;
    grad.layers.resize(net.layers.size());
    for (std::size_t l = 0; l < net.layers.size(); ++l) {
        grad.layers[l].weights =
            Matrix(net.layers[l].weights.rows, net.layers[l].weights.cols);
        grad.layers[l].thresholds.assign(net.layers[l].thresholds.size(), 0.0);
    }

    const auto& out = acts.a.back();
    std::vector<double> delta(out.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double y = static_cast<std::size_t>(label) == i ? 1.0 : 0.0;
        delta[i] = slope * (out[i] - y);
    }

    for (std::size_t l = net.layers.size(); l-- > 0;) {
        const auto& layer = net.layers[l];
        const auto& x_in =
            l == 0 ? std::vector<double>(input.begin(), input.end()) : acts.a[l - 1];
        auto& g = grad.layers[l];
        for (std::size_t i = 0; i < layer.weights.rows; ++i) {
            for (std::size_t j = 0; j < layer.weights.cols; ++j)
                g.weights.at(i, j) = delta[i] * x_in[j];
            g.thresholds[i] = -delta[i];
        }
        if (l == 0) break;
        std::vector<double> prev_delta(layer.weights.cols, 0.0);
        for (std::size_t j = 0; j < layer.weights.cols; ++j) {
            double s = 0.0;
            for (std::size_t i = 0; i < layer.weights.rows; ++i)
                s += layer.weights.at(i, j) * delta[i];
            const double a = acts.a[l - 1][j];
            prev_delta[j] = s * slope * a * (1.0 - a);
        }
        delta = std::move(prev_delta);
    }
    return grad;
}

} // namespace

double surrogate_loss(const FloatNetwork& net, std::span<const double> input,
                      int label, double slope) {
    // Per-output BCE evaluated from the logits (softplus form), so the loss
    // is smooth through saturation and the backward pass is its exact
    // derivative.
    std::vector<double> x(input.begin(), input.end());
    for (std::size_t l = 0; l + 1 < net.layers.size(); ++l) {
        const auto& layer = net.layers[l];
        std::vector<double> next(layer.weights.rows);
        for (std::size_t i = 0; i < layer.weights.rows; ++i) {
            double z = 0.0;
            for (std::size_t j = 0; j < layer.weights.cols; ++j)
                z += layer.weights.at(i, j) * x[j];
            next[i] = sigmoid(slope * (z - layer.thresholds[i]));
        }
        x = std::move(next);
    }
    const auto& out_layer = net.layers.back();
    const auto softplus = [](double u) {
        return std::max(u, 0.0) + std::log1p(std::exp(-std::abs(u)));
    };
    double loss = 0.0;
    for (std::size_t i = 0; i < out_layer.weights.rows; ++i) {
        double z = 0.0;
        for (std::size_t j = 0; j < out_layer.weights.cols; ++j)
            z += out_layer.weights.at(i, j) * x[j];
        const double u = slope * (z - out_layer.thresholds[i]);
        const double y = static_cast<std::size_t>(label) == i ? 1.0 : 0.0;
        loss += softplus(u) - y * u;
    }
    return loss;
}

FloatNetwork surrogate_gradient(const FloatNetwork& net, std::span<const double> input,
                                int label, double slope) {
    const auto acts = forward_surrogate(net, input, slope);
    return backward_surrogate(net, input, label, slope, acts);
}

FloatNetwork train(const io::Dataset& data, std::span<const std::size_t> train_indices,
                   const std::vector<std::size_t>& layer_sizes, const Hyperparams& hp,
                   std::uint64_t seed) {
    hp.validate();
    if (layer_sizes.size() < 2)
        throw ArgumentError("network needs at least two layer sizes");
    if (layer_sizes.front() != data.dim)
        throw ArgumentError("first layer size must match the dataset dimension");
    if (train_indices.empty())
        throw ArgumentError("training needs at least one sample");
    for (double v : data.images)
        if (!(v >= 0.0 && v <= 1.0))
            throw ArgumentError("dataset must be normalized to [0,1]");

    Rng rng(seed);
    FloatNetwork net;
    for (std::size_t l = 0; l + 1 < layer_sizes.size(); ++l) {
        FloatLayer layer;
        layer.weights = Matrix(layer_sizes[l + 1], layer_sizes[l]);
        for (auto& w : layer.weights.data) w = rng.uniform(0.0, hp.weight_init);
        layer.thresholds.resize(layer_sizes[l + 1]);
        // Start thresholds near the expected pre-activation magnitude so the
        // surrogate is not saturated at initialization.
        const double expected =
            0.25 * hp.weight_init * static_cast<double>(layer_sizes[l]);
        for (auto& t : layer.thresholds) t = rng.uniform(0.5 * expected, expected);
        net.layers.push_back(std::move(layer));
    }

    std::vector<std::size_t> order(train_indices.begin(), train_indices.end());
    FloatNetwork grad_sum;
    for (int epoch = 0; epoch < hp.epochs; ++epoch) {
        for (std::size_t i = order.size(); i > 1; --i)
            std::swap(order[i - 1], order[static_cast<std::size_t>(rng.next_below(i))]);
        for (std::size_t start = 0; start < order.size(); start += hp.batch_size) {
            const auto end = std::min(order.size(), start + hp.batch_size);
            grad_sum.layers.assign(net.layers.size(), {});
            for (std::size_t l = 0; l < net.layers.size(); ++l) {
                grad_sum.layers[l].weights =
                    Matrix(net.layers[l].weights.rows, net.layers[l].weights.cols);
                grad_sum.layers[l].thresholds.assign(net.layers[l].thresholds.size(), 0.0);
            }
            for (std::size_t s = start; s < end; ++s) {
                const auto idx = order[s];
                const auto acts = forward_surrogate(
                    net, std::span(data.image(idx), data.dim), hp.surrogate_slope);
                const auto grad =
                    backward_surrogate(net, std::span(data.image(idx), data.dim),
                                       data.labels[idx], hp.surrogate_slope, acts);
                for (std::size_t l = 0; l < net.layers.size(); ++l) {
                    auto& gs = grad_sum.layers[l];
                    const auto& g = grad.layers[l];
                    for (std::size_t j = 0; j < g.weights.data.size(); ++j)
                        gs.weights.data[j] += g.weights.data[j];
                    for (std::size_t j = 0; j < g.thresholds.size(); ++j)
                        gs.thresholds[j] += g.thresholds[j];
                }
            }
            const double lr = hp.learning_rate / static_cast<double>(end - start);
            for (std::size_t l = 0; l < net.layers.size(); ++l) {
                auto& layer = net.layers[l];
                const auto& g = grad_sum.layers[l];
                for (std::size_t j = 0; j < layer.weights.data.size(); ++j) {
                    layer.weights.data[j] -= lr * g.weights.data[j];
                    // projection keeps the engine's nonnegativity constraint
                    if (layer.weights.data[j] < 0.0) layer.weights.data[j] = 0.0;
                }
                for (std::size_t j = 0; j < layer.thresholds.size(); ++j) {
                    layer.thresholds[j] -= lr * g.thresholds[j];
                    if (layer.thresholds[j] < hp.theta_min)
                        layer.thresholds[j] = hp.theta_min;
                }
            }
        }
    }
    return net;
}

double evaluate_accuracy(const FloatNetwork& net, const io::Dataset& data,
                         std::span<const std::size_t> indices) {
    QuantizeOptions qo;
    qo.zero_scale_fallback = true;
    const auto spec = quantize(net, qo);
    ExecOptions opts;
    opts.mode = Mode::FloatReference;
    std::size_t correct = 0;
    for (auto idx : indices)
        if (predict(spec, std::span(data.image(idx), data.dim), opts) == data.labels[idx])
            ++correct;
    return static_cast<double>(correct) / static_cast<double>(indices.size());
}

int predict(const NetworkSpec& net, std::span<const double> input,
            const ExecOptions& opts) {
    device::DeviceConfig dev;
    dev.cells_per_side = static_cast<int>(net.layer_sizes.front());
    return infer(net, input, opts, dev).predicted;
}

std::vector<CompareRow> compare_modes(const NetworkSpec& net, const io::Dataset& data,
                                      std::span<const std::size_t> indices,
                                      const std::vector<Mode>& modes,
                                      const ExecOptions& base) {
    if (modes.size() < 2)
        throw ArgumentError("compare needs at least two modes");
    device::DeviceConfig dev;
    dev.cells_per_side = static_cast<int>(net.layer_sizes.front());

    // One inference pass per (mode, sample).
    std::vector<std::vector<InferenceResult>> results(modes.size());
    for (std::size_t m = 0; m < modes.size(); ++m) {
        ExecOptions opts = base;
        opts.mode = modes[m];
        results[m].reserve(indices.size());
        for (auto idx : indices)
            results[m].push_back(infer(net, std::span(data.image(idx), data.dim),
                                       opts, dev));
    }

    std::vector<CompareRow> rows;
    for (std::size_t a = 0; a < modes.size(); ++a)
        for (std::size_t b = a + 1; b < modes.size(); ++b) {
            CompareRow row;
            row.mode_a = mode_name(modes[a]);
            row.mode_b = mode_name(modes[b]);
            row.samples = indices.size();
            row.max_abs_pre_diff.assign(net.layers.size(), 0.0);
            std::size_t agree = 0;
            for (std::size_t s = 0; s < indices.size(); ++s) {
                const auto& ra = results[a][s];
                const auto& rb = results[b][s];
                if (ra.predicted == rb.predicted) ++agree;
                for (std::size_t l = 0; l < net.layers.size(); ++l)
                    for (std::size_t i = 0; i < ra.pre_activations[l].size(); ++i)
                        row.max_abs_pre_diff[l] = std::max(
                            row.max_abs_pre_diff[l],
                            std::abs(ra.pre_activations[l][i] - rb.pre_activations[l][i]));
            }
            row.agreement = static_cast<double>(agree) / static_cast<double>(indices.size());
            rows.push_back(std::move(row));
        }
    return rows;
}

std::string compare_csv(const std::vector<CompareRow>& rows) {
    std::ostringstream out;
    out << "mode_a,mode_b,samples,agreement_rate";
    const std::size_t n_layers = rows.empty() ? 0 : rows.front().max_abs_pre_diff.size();
    for (std::size_t l = 0; l < n_layers; ++l)
        out << ",max_abs_pre_diff_layer" << (l + 1);
    out << '\n';
    for (const auto& r : rows) {
        out << r.mode_a << ',' << r.mode_b << ',' << r.samples << ',';
        std::ostringstream num;
        num.precision(6);
        num << std::fixed << r.agreement;
        out << num.str();
        for (double d : r.max_abs_pre_diff) {
            std::ostringstream sci;
            sci.precision(6);
            sci << std::scientific << d;
            out << ',' << sci.str();
        }
        out << '\n';
    }
    return out.str();
}

} // namespace dnne::ann
