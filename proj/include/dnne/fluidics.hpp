#pragma once

#include "dnne/chem.hpp"
#include "dnne/device.hpp"
#include "dnne/trace.hpp"

#include <map>
#include <optional>
#include <variant>
#include <vector>

namespace dnne::fluid {

using Payload = std::variant<chem::Solution, chem::SsdnaPool, chem::EnzymeDose>;

enum class ValveState { Open, Closed };

/// A fluid packet: a payload currently at a channel segment.
struct Droplet {
    std::int64_t id = -1;
    Payload payload;
    double created_at_s = 0.0;
};

/// Two-slot valve-controlled mixing chamber.
struct Microcell {
    int row = 0;
    int col = 0;
    ValveState valve_l = ValveState::Open;
    ValveState valve_r = ValveState::Closed;
    std::optional<std::int64_t> left_slot;
    std::optional<std::int64_t> right_slot;
    bool mixed = false;
};

/// Deliberate protocol faults, used to prove the trace validator catches
/// broken runs. step_to_skip indexes the six microcell steps (1-based).
struct FaultInjection {
    std::optional<std::tuple<int, int, int>> skip_step; // (row, col, step 1..6)
    std::optional<std::pair<int, int>> double_occupy;   // load a second DNA droplet
    bool swap_merge_phases = false;                     // emit Z before Y
};

/// Discrete-event model of the k x k microcell array with its row merge
/// modules and closing reaction pipelines. Single-threaded; every run with
/// the same inputs and seed yields a byte-identical event log.
class ArraySim {
public:
    ArraySim(int k, device::TimingConstants timing = {}, FaultInjection faults = {});

    int k() const noexcept { return k_; }
    double clock_s() const noexcept { return clock_; }
    const Trace& trace() const noexcept { return trace_; }
    const Droplet& droplet(std::int64_t id) const;

    std::int64_t add_droplet(Payload payload);

    /// Run the six-step load/mix protocol on one cell. Returns the mixed
    /// droplet. `k_dose` is the dose-to-probability divisor (array dimension
    /// in assembled operation; 1 for a standalone cell).
    std::int64_t run_microcell_protocol(int row, int col, std::int64_t dna_droplet,
                                        std::int64_t enzyme_droplet,
                                        std::uint64_t k_dose);

    /// Load `rows x k` DNA droplets and as many enzyme droplets, run the
    /// protocol in every active cell. Assignments are row-major.
    void load_array(const std::vector<std::int64_t>& dna_droplets,
                    const std::vector<std::int64_t>& enzyme_droplets,
                    int active_rows = -1);

    /// Two-phase row merge; requires every cell of the row to have mixed.
    std::int64_t merge_row(int row);

    /// Closing reaction pipeline on a merged droplet: displacement readout,
    /// threshold, seesaw gate, enzyme translation, fresh-strand nicking.
    /// Returns the droplet holding the next-layer input solution.
    std::int64_t run_reaction_pipeline(std::int64_t merged_droplet,
                                       const chem::ActivationParams& activation,
                                       const chem::ErrorModel& err = {});

    /// Pinch the droplet into k equally spaced parts.
    std::vector<std::int64_t> separate_droplet(std::int64_t droplet, std::uint64_t k,
                                               std::uint64_t seed);

private:
    Microcell& cell_at(int row, int col);
    void emit(EventKind kind, int row, int col, std::int64_t droplet);
    void advance_to(double t);
    bool skip_step_here(int row, int col, int step) const;

    int k_;
    int active_rows_;
    device::TimingConstants timing_;
    FaultInjection faults_;
    double clock_ = 0.0;
    std::vector<Microcell> cells_;
    std::vector<std::optional<std::int64_t>> mixed_at_cell_; // collector segments
    std::vector<Droplet> droplets_;
    std::map<std::int64_t, int> merged_row_; // merged droplet -> source row
    Trace trace_;
};

/// Result of simulating one full ANN layer on the array.
struct LayerRun {
    std::vector<double> pre_activation; // merged fractions per row/neuron
    std::vector<double> output;         // post-activation fractions per row
    std::vector<std::int64_t> output_droplets;
    Trace trace;
};

/// Convenience wrapper: inputs broadcast down columns, weight w[i][j] in cell
/// (i,j), one merge + pipeline per row. Inputs are encoded at site A with
/// `molecules` strands per droplet; weights become enzyme doses b*t/k.
/// `activation` holds one entry per row, or a single entry applied to all.
LayerRun simulate_layer(const std::vector<double>& inputs,
                        const std::vector<std::vector<double>>& weights,
                        const std::vector<chem::ActivationParams>& activation,
                        std::uint64_t molecules, chem::SampleMode mode,
                        std::uint64_t seed, const device::TimingConstants& timing = {},
                        const chem::ErrorModel& err = {},
                        FaultInjection faults = {});

} // namespace dnne::fluid
