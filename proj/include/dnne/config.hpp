#pragma once

#include "dnne/ann.hpp"
#include "dnne/chem.hpp"
#include "dnne/device.hpp"

#include <cstdint>
#include <string>

namespace dnne::io {

/// Experiment configuration: chemistry, device geometry/timing, network and
/// run settings. Loaded from a versioned JSON file; every field is optional
/// and falls back to the defaults below. Out-of-range values are rejected
/// with the field's path in the message.
struct ExperimentConfig {
    struct Chemistry {
        std::uint64_t molecules = 1'000'000; // strands per droplet (t)
        double efficiency = 1.0;
        double spurious_rate = 0.0;
        double threshold = 0.5;   // default activation transition point
        double output_cap = 1.0;
        bool replenishment_excess = true;
        double gain = 1e3;
        std::uint64_t seed = 1;
    } chemistry;

    device::DeviceConfig device;

    struct Network {
        std::string spec_path;
        std::string output_readout = "step"; // step | fraction
    } network;

    struct Run {
        std::string mode = "ideal"; // float | ideal | sampled | fluidics
        std::string trace_path;
        std::string report_path;
    } run;

    struct Train {
        std::vector<std::uint64_t> layer_sizes = {64, 64, 10};
        int epochs = 96;
        std::uint64_t batch_size = 32;
        double learning_rate = 0.35;
        double surrogate_slope = 10.0;
        double weight_init = 0.05;
        double theta_min = 1e-3;
        double holdout_fraction = 0.2;
        std::uint64_t seed = 7;
    } train;

    chem::ErrorModel error_model() const;
    chem::ActivationParams activation() const;
    ann::Hyperparams hyperparams() const;
    ann::Mode mode() const;

    void validate() const;
};

ExperimentConfig default_config();
ExperimentConfig load_config(const std::string& path);
ExperimentConfig config_from_json_text(const std::string& text);
std::string config_to_json_text(const ExperimentConfig& cfg);

} // namespace dnne::io
