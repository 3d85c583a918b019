#pragma once

#include "dnne/chem.hpp"
#include "dnne/dataset.hpp"
#include "dnne/device.hpp"
#include "dnne/fluidics.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dnne::ann {

/// Dense row-major matrix, rows = neurons, cols = inputs.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// One trained layer in the float domain: unnormalized nonnegative weights
/// and per-neuron firing thresholds on the raw dot product.
struct FloatLayer {
    Matrix weights;
    std::vector<double> thresholds;
};

struct FloatNetwork {
    std::vector<FloatLayer> layers;

    std::vector<std::size_t> layer_sizes() const;
    double min_weight() const;
};

/// How the last layer is read: step activation then argmax (default), or
/// argmax over the raw pre-activation fractions.
enum class OutputReadout { Step, Fraction };

/// One layer mapped onto the chemistry: weights normalized into [0,1] by the
/// recorded scale, thresholds rescaled into the merged-fraction domain (0,1).
struct QuantizedLayer {
    Matrix weights;
    std::vector<double> thresholds;
    double scale = 1.0;
};

/// A network ready for the engine; serializable via network_io.
struct NetworkSpec {
    std::vector<std::size_t> layer_sizes; // input size, then per-layer neuron counts
    std::vector<QuantizedLayer> layers;
    OutputReadout output_readout = OutputReadout::Step;

    void validate() const;
};

enum class Mode { FloatReference, IdealChemistry, SampledChemistry, FullFluidics };

const char* mode_name(Mode m);
std::optional<Mode> mode_from_name(const std::string& name);

struct ExecOptions {
    Mode mode = Mode::IdealChemistry;
    std::uint64_t molecules = 1'000'000; // strands per droplet (t)
    std::uint64_t seed = 1;
    chem::ErrorModel err{};
    double output_cap = 1.0;
    bool capture_traces = false; // keep FullFluidics event logs in the result
};

struct LayerResult {
    std::vector<double> pre;           // merged-droplet fractions per neuron
    std::vector<double> out;           // post-activation values per neuron
    std::optional<fluid::Trace> trace; // FullFluidics only
};

/// Execute one layer: pre_i = (1/k) sum_j x_j w_ij, out_i = step(pre_i).
/// FloatReference computes the algebra directly; the chemistry modes route
/// every product through encode -> nick -> readout; FullFluidics adds the
/// microfluidic protocol and its event log.
LayerResult run_layer(std::span<const double> inputs, const QuantizedLayer& layer,
                      bool apply_step, const ExecOptions& opts,
                      std::uint64_t layer_seed);

struct InferenceResult {
    std::vector<std::vector<double>> pre_activations; // per compute layer
    std::vector<double> outputs;                      // last layer readout
    int predicted = 0;                                // argmax, ties -> lowest index
    std::vector<double> layer_latency_hours;          // per spec layer, device model
    double latency_hours = 0.0;                       // total
    std::vector<fluid::Trace> traces;                 // FullFluidics, if captured
};

/// Run the whole network. Latency comes from the device model for `dev`
/// (per layer: serialization * (transport + mult) + merge + activation).
InferenceResult infer(const NetworkSpec& net, std::span<const double> input,
                      const ExecOptions& opts, const device::DeviceConfig& dev);

struct QuantizeOptions {
    double input_scale = 1.0;        // s_x of the first layer's inputs
    bool zero_scale_fallback = false; // all-zero matrix: use scale 1 instead of failing
    OutputReadout output_readout = OutputReadout::Step;
};

/// Map a float network onto the engine: per-layer scale s = max weight,
/// stored weights w/s, thresholds theta/(k*s*s_x). Throws ArgumentError on a
/// negative weight and QuantizationError when a layer is not representable.
NetworkSpec quantize(const FloatNetwork& net, const QuantizeOptions& opts = {});

struct Hyperparams {
    int epochs = 96;
    std::size_t batch_size = 32;
    double learning_rate = 0.35;
    double surrogate_slope = 10.0; // steep sigmoid in place of the step
    double weight_init = 0.05;     // uniform [0, weight_init)
    double theta_min = 1e-3;       // projection floor for thresholds

    void validate() const;
};

/// Mini-batch gradient descent on the steep-sigmoid surrogate with
/// nonnegativity enforced by projection after every update. Deterministic
/// for a fixed seed.
FloatNetwork train(const io::Dataset& data, std::span<const std::size_t> train_indices,
                   const std::vector<std::size_t>& layer_sizes, const Hyperparams& hp,
                   std::uint64_t seed);

/// Surrogate loss (per-output binary cross-entropy against the one-hot
/// label) and its analytic gradient, exposed for gradient checking.
double surrogate_loss(const FloatNetwork& net, std::span<const double> input,
                      int label, double slope);
FloatNetwork surrogate_gradient(const FloatNetwork& net, std::span<const double> input,
                                int label, double slope);

/// Hard-step accuracy of a float network over the given samples (the
/// network is quantized and run in FloatReference mode).
double evaluate_accuracy(const FloatNetwork& net, const io::Dataset& data,
                         std::span<const std::size_t> indices);

int predict(const NetworkSpec& net, std::span<const double> input,
            const ExecOptions& opts);

struct CompareRow {
    std::string mode_a;
    std::string mode_b;
    std::size_t samples = 0;
    double agreement = 0.0;
    std::vector<double> max_abs_pre_diff; // per compute layer
};

/// Pairwise agreement between execution modes over dataset samples.
std::vector<CompareRow> compare_modes(const NetworkSpec& net, const io::Dataset& data,
                                      std::span<const std::size_t> indices,
                                      const std::vector<Mode>& modes,
                                      const ExecOptions& base);

std::string compare_csv(const std::vector<CompareRow>& rows);

} // namespace dnne::ann
