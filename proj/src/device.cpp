#include "dnne/device.hpp"

#include "dnne/errors.hpp"

#include <cmath>
#include <sstream>

namespace dnne::device {

void TimingConstants::validate() const {
    const double all[] = {transport_s, mult_s,       merge_s,       displacement_s,
                          threshold_s, gate_s,       translation_s, nick_s};
    for (double v : all)
        if (!(v >= 0.0))
            throw ArgumentError("timing constants must be >= 0");
}

void DeviceConfig::validate() const {
    if (cells_per_side < 1)
        throw ArgumentError("cells_per_side must be >= 1");
    if (!(channel_width_um > 0.0))
        throw ArgumentError("channel_width_um must be > 0");
    if (footprint_factor < 1)
        throw ArgumentError("footprint_factor must be >= 1");
    timing.validate();
}

double cell_area_mm2(const DeviceConfig& cfg) {
    cfg.validate();
    const double side_mm = cfg.footprint_factor * cfg.channel_width_um * 1e-3;
    return side_mm * side_mm;
}

double area_mm2(const DeviceConfig& cfg) {
    cfg.validate();
    const double side_mm =
        cfg.footprint_factor * cfg.cells_per_side * cfg.channel_width_um * 1e-3;
    return side_mm * side_mm;
}

double area_mm2_published(const DeviceConfig& cfg) {
    const double coeff = std::round(cell_area_mm2(cfg) * 100.0) / 100.0;
    const double k = cfg.cells_per_side;
    return coeff * k * k;
}

std::uint64_t serialization_factor(std::uint64_t k_layer, std::uint64_t k_physical) {
    if (k_layer == 0 || k_physical == 0)
        throw ArgumentError("layer and array dimensions must be >= 1");
    return (k_layer + k_physical - 1) / k_physical;
}

double layer_latency_hours(const LayerPlan& plan, const TimingConstants& timing) {
    timing.validate();
    const double seconds =
        static_cast<double>(plan.factor()) * (timing.transport_s + timing.mult_s) +
        timing.merge_s + timing.activation_s();
    return seconds / 3600.0;
}

std::vector<ExploreConfig> paper_configs() {
    std::vector<ExploreConfig> configs;
    const int sides[] = {196, 49, 16, 4};
    for (std::size_t i = 0; i < 4; ++i) {
        ExploreConfig c;
        c.name = "Config-" + std::to_string(i + 1);
        c.cells_per_side = sides[i];
        configs.push_back(c);
    }
    return configs;
}

std::vector<ExploreRow> explore(const std::vector<ExploreConfig>& configs,
                                const std::vector<std::uint64_t>& layer_sizes,
                                bool exact_areas) {
    if (configs.empty())
        throw ArgumentError("explore needs at least one config");
    if (layer_sizes.size() < 2)
        throw ArgumentError("explore needs a network with at least two layers");
    for (auto s : layer_sizes)
        if (s == 0)
            throw ArgumentError("layer sizes must be >= 1");

    std::vector<ExploreRow> rows;
    rows.reserve(configs.size());
    for (const auto& c : configs) {
        DeviceConfig pess{c.cells_per_side, c.pessimistic_channel_um,
                          c.pessimistic_footprint, c.timing};
        DeviceConfig opti{c.cells_per_side, c.optimistic_channel_um,
                          c.optimistic_footprint, c.timing};
        const auto k = static_cast<std::uint64_t>(c.cells_per_side);
        ExploreRow row;
        row.config_name = c.name;
        row.cells_per_side = c.cells_per_side;
        row.area_pessimistic_cm2 =
            (exact_areas ? area_mm2(pess) : area_mm2_published(pess)) / 100.0;
        row.area_optimistic_cm2 =
            (exact_areas ? area_mm2(opti) : area_mm2_published(opti)) / 100.0;
        row.exec_time_per_layer_hr =
            layer_latency_hours({layer_sizes[1], k}, c.timing);
        row.serialization_input = serialization_factor(layer_sizes.front(), k);
        row.serialization_hidden = serialization_factor(layer_sizes[1], k);
        row.serialization_output = serialization_factor(layer_sizes.back(), k);
        rows.push_back(row);
    }
    return rows;
}

std::string explore_csv(const std::vector<ExploreRow>& rows) {
    std::ostringstream out;
    out << "config_name,cells_per_side,area_pessimistic_cm2,area_optimistic_cm2,"
           "exec_time_per_layer_hr,serialization_input,serialization_hidden,"
           "serialization_output\n";
    for (const auto& r : rows) {
        std::ostringstream line;
        line.precision(6);
        line << r.config_name << ',' << r.cells_per_side << ',' << std::fixed
             << r.area_pessimistic_cm2 << ',' << r.area_optimistic_cm2 << ','
             << r.exec_time_per_layer_hr << ',' << r.serialization_input << ','
             << r.serialization_hidden << ',' << r.serialization_output;
        out << line.str() << '\n';
    }
    return out.str();
}

} // namespace dnne::device
