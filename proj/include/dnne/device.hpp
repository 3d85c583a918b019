#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dnne::device {

/// Stage durations of the microfluidic engine, in simulated seconds.
/// Activation time is the derived sum of its five sub-stages.
struct TimingConstants {
    double transport_s = 120.0;     // droplet transport across all stages
    double mult_s = 7200.0;         // second-site nicking (the multiply)
    double merge_s = 3600.0;        // row-wise droplet merging
    double displacement_s = 3600.0; // heat + probe displacement of ssDNA
    double threshold_s = 3600.0;    // threshold strands consuming input
    double gate_s = 3600.0;         // seesaw gate + replenishment
    double translation_s = 3600.0;  // enzyme untagging + pull-down
    double nick_s = 3732.0;         // fresh-strand nicking for the next layer

    double activation_s() const {
        return displacement_s + threshold_s + gate_s + translation_s + nick_s;
    }

    void validate() const;
};

/// Physical device description. footprint_factor is the number of channel
/// widths a microcell occupies per side (6 pessimistic, 3 condensed).
struct DeviceConfig {
    int cells_per_side = 196;       // microcells per array side (k_physical)
    double channel_width_um = 200.0;
    int footprint_factor = 6;
    TimingConstants timing;

    void validate() const;
};

/// Area of one microcell in mm^2: (footprint_factor * channel_width)^2.
double cell_area_mm2(const DeviceConfig& cfg);

/// Array area in mm^2: (footprint_factor * k * channel_width)^2.
double area_mm2(const DeviceConfig& cfg);

/// Array area using the per-cell coefficient rounded to two decimals in
/// mm^2, matching the published closed-form estimates (1.44 k^2 and
/// 0.01 k^2). The exact-coefficient model is area_mm2().
double area_mm2_published(const DeviceConfig& cfg);

/// Sequential passes needed when a layer is wider than the physical array.
std::uint64_t serialization_factor(std::uint64_t k_layer, std::uint64_t k_physical);

/// Execution plan for one ANN layer on a given array dimension.
struct LayerPlan {
    std::uint64_t k_layer = 0;
    std::uint64_t k_physical = 0;

    std::uint64_t factor() const { return serialization_factor(k_layer, k_physical); }
};

/// Per-layer latency in hours:
///   factor * (t_transport + t_mult) + t_merge + t_activation.
double layer_latency_hours(const LayerPlan& plan, const TimingConstants& timing);

/// One array geometry point in a design-space sweep: an array dimension with
/// a pessimistic and an optimistic fabrication estimate.
struct ExploreConfig {
    std::string name;
    int cells_per_side = 0;
    double pessimistic_channel_um = 200.0;
    int pessimistic_footprint = 6;
    double optimistic_channel_um = 35.0;
    int optimistic_footprint = 3;
    TimingConstants timing;
};

struct ExploreRow {
    std::string config_name;
    int cells_per_side = 0;
    double area_pessimistic_cm2 = 0.0;
    double area_optimistic_cm2 = 0.0;
    double exec_time_per_layer_hr = 0.0;
    std::uint64_t serialization_input = 0;
    std::uint64_t serialization_hidden = 0;
    std::uint64_t serialization_output = 0;
};

/// The four published design points (196/49/16/4 cells per side).
std::vector<ExploreConfig> paper_configs();

/// Sweep the configs for a network given by its layer sizes. The reported
/// per-layer execution time is the hidden layer's (index 1). For the
/// optimistic column the published rounded per-cell coefficient is used
/// unless exact_areas is set.
std::vector<ExploreRow> explore(const std::vector<ExploreConfig>& configs,
                                const std::vector<std::uint64_t>& layer_sizes,
                                bool exact_areas = false);

/// Stable CSV encoding of a sweep (fixed header and column order).
std::string explore_csv(const std::vector<ExploreRow>& rows);

} // namespace dnne::device
