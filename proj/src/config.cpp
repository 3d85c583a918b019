#include "dnne/config.hpp"

#include "dnne/errors.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace dnne::io {

using nlohmann::json;

namespace {

template <typename T>
void read_field(const json& j, const std::string& path, const std::string& key, T& out) {
    if (!j.contains(key)) return;
    try {
        out = j.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError(path + "." + key + ": wrong type");
    }
}

void require(bool ok, const std::string& field, const std::string& what) {
    if (!ok) throw ConfigError(field + ": " + what);
}

} // namespace

chem::ErrorModel ExperimentConfig::error_model() const {
    return chem::ErrorModel{chemistry.efficiency, chemistry.spurious_rate};
}

chem::ActivationParams ExperimentConfig::activation() const {
    return chem::ActivationParams{chemistry.threshold, chemistry.output_cap,
                                  chemistry.replenishment_excess, chemistry.gain};
}

ann::Hyperparams ExperimentConfig::hyperparams() const {
    ann::Hyperparams hp;
    hp.epochs = train.epochs;
    hp.batch_size = train.batch_size;
    hp.learning_rate = train.learning_rate;
    hp.surrogate_slope = train.surrogate_slope;
    hp.weight_init = train.weight_init;
    hp.theta_min = train.theta_min;
    return hp;
}

ann::Mode ExperimentConfig::mode() const {
    auto m = ann::mode_from_name(run.mode);
    if (!m) throw ConfigError("run.mode: unknown mode '" + run.mode + "'");
    return *m;
}

void ExperimentConfig::validate() const {
    require(chemistry.molecules >= 1, "chemistry.molecules", "must be >= 1");
    require(chemistry.efficiency > 0.0 && chemistry.efficiency <= 1.0,
            "chemistry.efficiency", "must be in (0,1]");
    require(chemistry.spurious_rate >= 0.0 && chemistry.spurious_rate < 1.0,
            "chemistry.spurious_rate", "must be in [0,1)");
    require(chemistry.threshold > 0.0 && chemistry.threshold < 1.0,
            "chemistry.threshold", "must be in (0,1)");
    require(chemistry.output_cap > 0.0 && chemistry.output_cap <= 1.0,
            "chemistry.output_cap", "must be in (0,1]");
    require(chemistry.gain > 0.0, "chemistry.gain", "must be > 0");

    require(device.cells_per_side >= 1, "device.cells_per_side", "must be >= 1");
    require(device.channel_width_um > 0.0, "device.channel_width_um", "must be > 0");
    require(device.footprint_factor >= 1, "device.footprint_factor", "must be >= 1");
    const struct {
        const char* name;
        double v;
    } timings[] = {
        {"device.timing.transport_s", device.timing.transport_s},
        {"device.timing.mult_s", device.timing.mult_s},
        {"device.timing.merge_s", device.timing.merge_s},
        {"device.timing.displacement_s", device.timing.displacement_s},
        {"device.timing.threshold_s", device.timing.threshold_s},
        {"device.timing.gate_s", device.timing.gate_s},
        {"device.timing.translation_s", device.timing.translation_s},
        {"device.timing.nick_s", device.timing.nick_s},
    };
    for (const auto& t : timings)
        require(t.v >= 0.0, t.name, "must be >= 0");

    require(run.mode == "float" || run.mode == "ideal" || run.mode == "sampled" ||
                run.mode == "fluidics",
            "run.mode", "must be one of float|ideal|sampled|fluidics");
    require(network.output_readout == "step" || network.output_readout == "fraction",
            "network.output_readout", "must be step or fraction");

    require(train.layer_sizes.size() >= 2, "train.layer_sizes",
            "needs at least two layers");
    for (auto s : train.layer_sizes)
        require(s >= 1, "train.layer_sizes", "entries must be >= 1");
    require(train.epochs >= 1, "train.epochs", "must be >= 1");
    require(train.batch_size >= 1, "train.batch_size", "must be >= 1");
    require(train.learning_rate > 0.0, "train.learning_rate", "must be > 0");
    require(train.surrogate_slope > 0.0, "train.surrogate_slope", "must be > 0");
    require(train.weight_init > 0.0, "train.weight_init", "must be > 0");
    require(train.theta_min > 0.0, "train.theta_min", "must be > 0");
    require(train.holdout_fraction > 0.0 && train.holdout_fraction < 1.0,
            "train.holdout_fraction", "must be in (0,1)");
}

ExperimentConfig default_config() { return ExperimentConfig{}; }

ExperimentConfig config_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    ExperimentConfig cfg;
    int version = 1;
    read_field(j, "", "format_version", version);
    if (version != 1)
        throw ConfigError("format_version: unsupported version " +
                          std::to_string(version));

    if (j.contains("chemistry")) {
        const auto& c = j.at("chemistry");
        read_field(c, "chemistry", "molecules", cfg.chemistry.molecules);
        read_field(c, "chemistry", "efficiency", cfg.chemistry.efficiency);
        read_field(c, "chemistry", "spurious_rate", cfg.chemistry.spurious_rate);
        read_field(c, "chemistry", "threshold", cfg.chemistry.threshold);
        read_field(c, "chemistry", "output_cap", cfg.chemistry.output_cap);
        read_field(c, "chemistry", "replenishment_excess",
                   cfg.chemistry.replenishment_excess);
        read_field(c, "chemistry", "gain", cfg.chemistry.gain);
        read_field(c, "chemistry", "seed", cfg.chemistry.seed);
    }
    if (j.contains("device")) {
        const auto& d = j.at("device");
        read_field(d, "device", "cells_per_side", cfg.device.cells_per_side);
        read_field(d, "device", "channel_width_um", cfg.device.channel_width_um);
        read_field(d, "device", "footprint_factor", cfg.device.footprint_factor);
        if (d.contains("timing")) {
            const auto& t = d.at("timing");
            read_field(t, "device.timing", "transport_s", cfg.device.timing.transport_s);
            read_field(t, "device.timing", "mult_s", cfg.device.timing.mult_s);
            read_field(t, "device.timing", "merge_s", cfg.device.timing.merge_s);
            read_field(t, "device.timing", "displacement_s",
                       cfg.device.timing.displacement_s);
            read_field(t, "device.timing", "threshold_s", cfg.device.timing.threshold_s);
            read_field(t, "device.timing", "gate_s", cfg.device.timing.gate_s);
            read_field(t, "device.timing", "translation_s",
                       cfg.device.timing.translation_s);
            read_field(t, "device.timing", "nick_s", cfg.device.timing.nick_s);
        }
    }
    if (j.contains("network")) {
        const auto& n = j.at("network");
        read_field(n, "network", "spec_path", cfg.network.spec_path);
        read_field(n, "network", "output_readout", cfg.network.output_readout);
    }
    if (j.contains("run")) {
        const auto& r = j.at("run");
        read_field(r, "run", "mode", cfg.run.mode);
        read_field(r, "run", "trace_path", cfg.run.trace_path);
        read_field(r, "run", "report_path", cfg.run.report_path);
    }
    if (j.contains("train")) {
        const auto& t = j.at("train");
        read_field(t, "train", "layer_sizes", cfg.train.layer_sizes);
        read_field(t, "train", "epochs", cfg.train.epochs);
        read_field(t, "train", "batch_size", cfg.train.batch_size);
        read_field(t, "train", "learning_rate", cfg.train.learning_rate);
        read_field(t, "train", "surrogate_slope", cfg.train.surrogate_slope);
        read_field(t, "train", "weight_init", cfg.train.weight_init);
        read_field(t, "train", "theta_min", cfg.train.theta_min);
        read_field(t, "train", "holdout_fraction", cfg.train.holdout_fraction);
        read_field(t, "train", "seed", cfg.train.seed);
    }
    cfg.validate();
    return cfg;
}

std::string config_to_json_text(const ExperimentConfig& cfg) {
    json j;
    j["format_version"] = 1;
    j["chemistry"] = {
        {"molecules", cfg.chemistry.molecules},
        {"efficiency", cfg.chemistry.efficiency},
        {"spurious_rate", cfg.chemistry.spurious_rate},
        {"threshold", cfg.chemistry.threshold},
        {"output_cap", cfg.chemistry.output_cap},
        {"replenishment_excess", cfg.chemistry.replenishment_excess},
        {"gain", cfg.chemistry.gain},
        {"seed", cfg.chemistry.seed},
    };
    j["device"] = {
        {"cells_per_side", cfg.device.cells_per_side},
        {"channel_width_um", cfg.device.channel_width_um},
        {"footprint_factor", cfg.device.footprint_factor},
        {"timing",
         {
             {"transport_s", cfg.device.timing.transport_s},
             {"mult_s", cfg.device.timing.mult_s},
             {"merge_s", cfg.device.timing.merge_s},
             {"displacement_s", cfg.device.timing.displacement_s},
             {"threshold_s", cfg.device.timing.threshold_s},
             {"gate_s", cfg.device.timing.gate_s},
             {"translation_s", cfg.device.timing.translation_s},
             {"nick_s", cfg.device.timing.nick_s},
         }},
    };
    j["network"] = {
        {"spec_path", cfg.network.spec_path},
        {"output_readout", cfg.network.output_readout},
    };
    j["run"] = {
        {"mode", cfg.run.mode},
        {"trace_path", cfg.run.trace_path},
        {"report_path", cfg.run.report_path},
    };
    j["train"] = {
        {"layer_sizes", cfg.train.layer_sizes},
        {"epochs", cfg.train.epochs},
        {"batch_size", cfg.train.batch_size},
        {"learning_rate", cfg.train.learning_rate},
        {"surrogate_slope", cfg.train.surrogate_slope},
        {"weight_init", cfg.train.weight_init},
        {"theta_min", cfg.train.theta_min},
        {"holdout_fraction", cfg.train.holdout_fraction},
        {"seed", cfg.train.seed},
    };
    return j.dump(2) + "\n";
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError(path + ": cannot open");
    std::ostringstream ss;
    ss << in.rdbuf();
    return config_from_json_text(ss.str());
}

} // namespace dnne::io
