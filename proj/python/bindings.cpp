#include "dnne/ann.hpp"
#include "dnne/chem.hpp"
#include "dnne/config.hpp"
#include "dnne/dataset.hpp"
#include "dnne/device.hpp"
#include "dnne/fluidics.hpp"
#include "dnne/network_io.hpp"
#include "dnne/stochastic.hpp"
#include "dnne/trace.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace pybind11::literals;
using namespace dnne;

namespace {

stoch::GateKind gate_or_throw(const std::string& name) {
    auto g = stoch::gate_from_name(name);
    if (!g) throw ArgumentError("unknown gate: " + name);
    return *g;
}

ann::Mode mode_or_throw(const std::string& name) {
    auto m = ann::mode_from_name(name);
    if (!m) throw ArgumentError("unknown mode: " + name);
    return *m;
}

chem::SampleMode sample_mode_or_throw(const std::string& name) {
    if (name == "ideal") return chem::SampleMode::Ideal;
    if (name == "sampled") return chem::SampleMode::Sampled;
    throw ArgumentError("mode must be ideal or sampled");
}

} // namespace

PYBIND11_MODULE(_dnne, m) {
    m.doc() = "Stochastic computation on nicked DNA and the microfluidic "
              "neural engine built on it";

    py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
    py::register_exception<QuantizationError>(m, "QuantizationError", PyExc_ValueError);
    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);

    // stochastic gates
    m.def(
        "gate_eval",
        [](const std::string& gate, double x, std::optional<double> y) {
            std::optional<Fraction> fy;
            if (y) fy = Fraction(*y);
            return stoch::gate_eval(gate_or_throw(gate), Fraction(x), fy).value();
        },
        "gate"_a, "x"_a, "y"_a = py::none(),
        "Exact unit-interval algebra of a logic gate on independent inputs.");
    m.def(
        "bitstream_encode",
        [](double x, std::size_t n, std::uint64_t seed) {
            const auto s = stoch::Bitstream::encode(Fraction(x), n, seed);
            return s.bits();
        },
        "x"_a, "n"_a, "seed"_a = 7,
        "Random bitstream with P(1) = x; deterministic per seed.");

    // chemistry
    m.def(
        "multiply",
        [](double a, double b, const std::string& mode, std::uint64_t molecules,
           std::uint64_t seed, double efficiency, double spurious_rate) {
            auto sol = chem::Solution::encode_fraction(
                Fraction(a), molecules, sample_mode_or_throw(mode), seed);
            const chem::EnzymeDose dose{b * static_cast<double>(molecules), false};
            chem::ErrorModel err{efficiency, spurious_rate};
            return chem::probe_readout(chem::nick_site_b(sol, dose, 1), err).fraction();
        },
        "a"_a, "b"_a, "mode"_a = "ideal", "molecules"_a = 1'000'000, "seed"_a = 1,
        "efficiency"_a = 1.0, "spurious_rate"_a = 0.0,
        "Encode a at site A, nick site B at rate b, read the product out.");
    m.def(
        "seesaw_activation",
        [](double x, double threshold, double cap) {
            chem::ActivationParams p;
            p.threshold = threshold;
            p.output_cap = cap;
            return chem::seesaw_activation(Fraction(x), p).value();
        },
        "x"_a, "threshold"_a, "cap"_a = 1.0);

    // device model
    m.def(
        "area_mm2",
        [](int k, double channel_width_um, int footprint_factor) {
            return device::area_mm2({k, channel_width_um, footprint_factor, {}});
        },
        "cells_per_side"_a, "channel_width_um"_a, "footprint_factor"_a);
    m.def("serialization_factor", &device::serialization_factor, "k_layer"_a,
          "k_physical"_a);
    m.def(
        "layer_latency_hours",
        [](std::uint64_t k_layer, std::uint64_t k_physical) {
            return device::layer_latency_hours({k_layer, k_physical}, {});
        },
        "k_layer"_a, "k_physical"_a,
        "Per-layer latency in hours under the default timing constants.");
    m.def(
        "explore",
        [](const std::vector<std::uint64_t>& layers, bool exact_areas) {
            const auto rows = device::explore(device::paper_configs(), layers, exact_areas);
            py::list out;
            for (const auto& r : rows) {
                py::dict d;
                d["config_name"] = r.config_name;
                d["cells_per_side"] = r.cells_per_side;
                d["area_pessimistic_cm2"] = r.area_pessimistic_cm2;
                d["area_optimistic_cm2"] = r.area_optimistic_cm2;
                d["exec_time_per_layer_hr"] = r.exec_time_per_layer_hr;
                d["serialization_input"] = r.serialization_input;
                d["serialization_hidden"] = r.serialization_hidden;
                d["serialization_output"] = r.serialization_output;
                out.append(d);
            }
            return out;
        },
        "layers"_a = std::vector<std::uint64_t>{784, 784, 10}, "exact_areas"_a = false,
        "Design-space sweep over the four published configurations.");

    // fluidics
    m.def(
        "simulate_layer",
        [](const std::vector<double>& inputs,
           const std::vector<std::vector<double>>& weights, double threshold,
           std::uint64_t molecules, const std::string& mode, std::uint64_t seed) {
            chem::ActivationParams act;
            act.threshold = threshold;
            auto run = fluid::simulate_layer(inputs, weights, {act}, molecules,
                                             sample_mode_or_throw(mode), seed);
            return py::make_tuple(run.pre_activation, run.output,
                                  run.trace.to_text());
        },
        "inputs"_a, "weights"_a, "threshold"_a = 0.5, "molecules"_a = 1'000'000,
        "mode"_a = "ideal", "seed"_a = 1,
        "Run one layer on the microcell array; returns (pre, out, trace_text).");
    m.def(
        "validate_trace",
        [](const std::string& text) -> std::optional<std::pair<std::string, std::string>> {
            const auto v = fluid::validate_trace(fluid::Trace::from_text(text));
            if (!v) return std::nullopt;
            return std::make_pair(v->rule, v->detail);
        },
        "trace_text"_a,
        "None when the log satisfies the protocol grammars, else (rule, detail).");

    // network + inference
    py::class_<ann::NetworkSpec>(m, "Network", "A quantized network ready for the engine.")
        .def_property_readonly("layer_sizes",
                               [](const ann::NetworkSpec& n) { return n.layer_sizes; })
        .def(
            "save",
            [](const ann::NetworkSpec& n, const std::string& path) {
                io::save_network(n, path);
            },
            "path"_a)
        .def("to_text", &io::network_to_text)
        .def_static("load", &io::load_network, "path"_a)
        .def_static("from_text", &io::network_from_text, "text"_a);

    m.def(
        "train_digits",
        [](const std::vector<std::size_t>& layer_sizes, int epochs, double learning_rate,
           double surrogate_slope, std::uint64_t seed, double holdout_fraction) {
            const auto& ds = io::builtin_digits();
            const auto split = io::split_indices(ds.count, holdout_fraction, seed);
            ann::Hyperparams hp;
            hp.epochs = epochs;
            hp.learning_rate = learning_rate;
            hp.surrogate_slope = surrogate_slope;
            const auto net = ann::train(ds, split.train, layer_sizes, hp, seed);
            const double acc = ann::evaluate_accuracy(net, ds, split.test);
            return py::make_tuple(ann::quantize(net), acc);
        },
        "layer_sizes"_a = std::vector<std::size_t>{64, 64, 10}, "epochs"_a = 96,
        "learning_rate"_a = 0.35, "surrogate_slope"_a = 10.0, "seed"_a = 7,
        "holdout_fraction"_a = 0.2,
        "Train on the builtin corpus; returns (network, holdout_accuracy).");
    m.def(
        "infer",
        [](const ann::NetworkSpec& net, const std::vector<double>& input,
           const std::string& mode, std::uint64_t molecules, std::uint64_t seed,
           int device_cells_per_side) {
            ann::ExecOptions opts;
            opts.mode = mode_or_throw(mode);
            opts.molecules = molecules;
            opts.seed = seed;
            device::DeviceConfig dev;
            dev.cells_per_side = device_cells_per_side;
            const auto r = ann::infer(net, input, opts, dev);
            py::dict d;
            d["predicted"] = r.predicted;
            d["outputs"] = r.outputs;
            d["pre_activations"] = r.pre_activations;
            d["latency_hours"] = r.latency_hours;
            d["layer_latency_hours"] = r.layer_latency_hours;
            return d;
        },
        "network"_a, "input"_a, "mode"_a = "ideal", "molecules"_a = 100'000,
        "seed"_a = 1, "device_cells_per_side"_a = 196);

    m.def("builtin_digits", []() {
        const auto& ds = io::builtin_digits();
        py::dict d;
        d["count"] = ds.count;
        d["dim"] = ds.dim;
        d["images"] = ds.images;
        d["labels"] = ds.labels;
        return d;
    });
}
