#include "dnne/fluidics.hpp"

#include "dnne/errors.hpp"

#include <algorithm>
#include <cmath>

namespace dnne::fluid {

namespace {

// Nominal channel transit tick. Transport is a lump estimate in the latency
// model; the simulator only needs a uniform per-segment step.
constexpr double kTransitTickS = 1.0;

const chem::Solution& solution_payload(const Droplet& d, const char* what) {
    if (const auto* s = std::get_if<chem::Solution>(&d.payload)) return *s;
    throw ArgumentError(std::string(what) + ": droplet " + std::to_string(d.id) +
                        " does not hold a DNA solution");
}

const chem::EnzymeDose& enzyme_payload(const Droplet& d, const char* what) {
    if (const auto* e = std::get_if<chem::EnzymeDose>(&d.payload)) return *e;
    throw ArgumentError(std::string(what) + ": droplet " + std::to_string(d.id) +
                        " does not hold an enzyme dose");
}

} // namespace

ArraySim::ArraySim(int k, device::TimingConstants timing, FaultInjection faults)
    : k_(k), active_rows_(k), timing_(timing), faults_(faults) {
    if (k < 1)
        throw ArgumentError("array dimension must be >= 1");
    timing_.validate();
    cells_.resize(static_cast<std::size_t>(k) * k);
    mixed_at_cell_.resize(cells_.size());
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c)
            cells_[static_cast<std::size_t>(r) * k + c] = Microcell{r, c};
    trace_.rows = k;
    trace_.cols = k;
}

Microcell& ArraySim::cell_at(int row, int col) {
    if (row < 0 || row >= k_ || col < 0 || col >= k_)
        throw ArgumentError("cell index out of range");
    return cells_[static_cast<std::size_t>(row) * k_ + col];
}

const Droplet& ArraySim::droplet(std::int64_t id) const {
    if (id < 0 || id >= static_cast<std::int64_t>(droplets_.size()))
        throw ArgumentError("unknown droplet id " + std::to_string(id));
    return droplets_[static_cast<std::size_t>(id)];
}

std::int64_t ArraySim::add_droplet(Payload payload) {
    const auto id = static_cast<std::int64_t>(droplets_.size());
    droplets_.push_back(Droplet{id, std::move(payload), clock_});
    return id;
}

void ArraySim::emit(EventKind kind, int row, int col, std::int64_t droplet) {
    trace_.events.push_back(Event{clock_, kind, row, col, droplet});
}

void ArraySim::advance_to(double t) {
    if (t < clock_)
        throw ProtocolError("simulation clock would move backwards");
    clock_ = t;
}

bool ArraySim::skip_step_here(int row, int col, int step) const {
    return faults_.skip_step &&
           *faults_.skip_step == std::make_tuple(row, col, step);
}

std::int64_t ArraySim::run_microcell_protocol(int row, int col,
                                              std::int64_t dna_droplet,
                                              std::int64_t enzyme_droplet,
                                              std::uint64_t k_dose) {
    Microcell& cell = cell_at(row, col);
    if (cell.left_slot || cell.right_slot ||
        mixed_at_cell_[static_cast<std::size_t>(row) * k_ + col])
        throw ProtocolError("cell (" + std::to_string(row) + "," +
                            std::to_string(col) + ") slot already occupied");
    const auto& sol = solution_payload(droplet(dna_droplet), "microcell");
    const auto& dose = enzyme_payload(droplet(enzyme_droplet), "microcell");

    // Step 1: route flow left, right side static.
    advance_to(clock_ + kTransitTickS);
    cell.valve_r = ValveState::Closed;
    cell.valve_l = ValveState::Open;
    if (!skip_step_here(row, col, 1)) emit(EventKind::ValveRCloseLOpen, row, col, -1);
    // Step 2: DNA droplet to its timed position on the left channel.
    advance_to(clock_ + kTransitTickS);
    cell.left_slot = dna_droplet;
    if (!skip_step_here(row, col, 2)) emit(EventKind::DnaLoadLeft, row, col, dna_droplet);
    // Step 3: reroute flow right; the DNA droplet sits in static fluid.
    advance_to(clock_ + kTransitTickS);
    cell.valve_l = ValveState::Closed;
    cell.valve_r = ValveState::Open;
    if (!skip_step_here(row, col, 3)) emit(EventKind::ValveLCloseROpen, row, col, -1);
    // Step 4: enzyme droplet to the matching position on the right channel.
    advance_to(clock_ + kTransitTickS);
    cell.right_slot = enzyme_droplet;
    if (!skip_step_here(row, col, 4))
        emit(EventKind::EnzymeLoadRight, row, col, enzyme_droplet);
    // Step 5: both valves open, both droplets pushed together.
    advance_to(clock_ + kTransitTickS);
    cell.valve_l = ValveState::Open;
    cell.valve_r = ValveState::Open;
    if (!skip_step_here(row, col, 5)) emit(EventKind::ValvesBothOpen, row, col, -1);
    // Step 6: co-exit and mix; the second nicking happens in the merged flow.
    advance_to(clock_ + kTransitTickS);
    const auto mixed = add_droplet(chem::nick_site_b(sol, dose, k_dose));
    if (!skip_step_here(row, col, 6)) emit(EventKind::CoExitMix, row, col, mixed);
    cell.left_slot.reset();
    cell.right_slot.reset();
    cell.mixed = true;
    // Mixed droplet rests at the cell's collector segment until the merge.
    mixed_at_cell_[static_cast<std::size_t>(row) * k_ + col] = mixed;
    return mixed;
}

void ArraySim::load_array(const std::vector<std::int64_t>& dna_droplets,
                          const std::vector<std::int64_t>& enzyme_droplets,
                          int active_rows) {
    const int rows = active_rows < 0 ? k_ : active_rows;
    if (rows < 1 || rows > k_)
        throw ArgumentError("active row count out of range");
    active_rows_ = rows;
    const auto expected = static_cast<std::size_t>(rows) * k_;
    if (dna_droplets.size() != expected)
        throw ArgumentError("need " + std::to_string(expected) + " DNA droplets, got " +
                            std::to_string(dna_droplets.size()));
    if (enzyme_droplets.size() != expected)
        throw ArgumentError("need " + std::to_string(expected) +
                            " enzyme droplets, got " +
                            std::to_string(enzyme_droplets.size()));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < k_; ++c) {
            const Microcell& cell = cells_[static_cast<std::size_t>(r) * k_ + c];
            if (cell.left_slot || cell.right_slot)
                throw ProtocolError("cell (" + std::to_string(r) + "," +
                                    std::to_string(c) + ") slot already occupied");
            solution_payload(droplet(dna_droplets[static_cast<std::size_t>(r) * k_ + c]),
                             "load_array");
            enzyme_payload(
                droplet(enzyme_droplets[static_cast<std::size_t>(r) * k_ + c]),
                "load_array");
        }

    // Step 1 everywhere: right valves closed, left valves open.
    advance_to(clock_ + kTransitTickS);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < k_; ++c) {
            Microcell& cell = cell_at(r, c);
            cell.valve_r = ValveState::Closed;
            cell.valve_l = ValveState::Open;
            if (!skip_step_here(r, c, 1)) emit(EventKind::ValveRCloseLOpen, r, c, -1);
        }

    // Step 2: DNA droplets stream up the left channels at fixed spacing and
    // halt together once every cell holds one. Droplet for row i enters i-th.
    const double t_dna0 = clock_;
    for (int m = 1; m <= rows; ++m) {
        advance_to(t_dna0 + m * kTransitTickS);
        for (int c = 0; c < k_; ++c)
            for (int i = 0; i < m; ++i) {
                const int row = rows + i - m;
                const auto id = dna_droplets[static_cast<std::size_t>(i) * k_ + c];
                if (m == rows) {
                    cell_at(row, c).left_slot = id;
                    if (!skip_step_here(row, c, 2)) emit(EventKind::DnaLoadLeft, row, c, id);
                } else {
                    emit(EventKind::DnaTransit, row, c, id);
                }
            }
    }
    if (faults_.double_occupy) {
        // Push one extra DNA droplet into an already-loaded cell.
        auto [fr, fc] = *faults_.double_occupy;
        advance_to(clock_ + kTransitTickS);
        const auto extra = add_droplet(droplet(dna_droplets[0]).payload);
        emit(EventKind::DnaLoadLeft, fr, fc, extra);
    }

    // Step 3 everywhere: left valves closed, right valves open.
    advance_to(clock_ + kTransitTickS);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < k_; ++c) {
            Microcell& cell = cell_at(r, c);
            cell.valve_l = ValveState::Closed;
            cell.valve_r = ValveState::Open;
            if (!skip_step_here(r, c, 3)) emit(EventKind::ValveLCloseROpen, r, c, -1);
        }

    // Step 4: enzyme droplets stream up the right channels the same way.
    const double t_enz0 = clock_;
    for (int m = 1; m <= rows; ++m) {
        advance_to(t_enz0 + m * kTransitTickS);
        for (int c = 0; c < k_; ++c)
            for (int i = 0; i < m; ++i) {
                const int row = rows + i - m;
                const auto id = enzyme_droplets[static_cast<std::size_t>(i) * k_ + c];
                if (m == rows) {
                    cell_at(row, c).right_slot = id;
                    if (!skip_step_here(row, c, 4))
                        emit(EventKind::EnzymeLoadRight, row, c, id);
                } else {
                    emit(EventKind::EnzymeTransit, row, c, id);
                }
            }
    }

    // Steps 5 and 6 everywhere: open both valves, co-exit and mix.
    advance_to(clock_ + kTransitTickS);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < k_; ++c) {
            Microcell& cell = cell_at(r, c);
            cell.valve_l = ValveState::Open;
            cell.valve_r = ValveState::Open;
            if (!skip_step_here(r, c, 5)) emit(EventKind::ValvesBothOpen, r, c, -1);
        }
    advance_to(clock_ + kTransitTickS);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < k_; ++c) {
            Microcell& cell = cell_at(r, c);
            const auto& sol = solution_payload(droplet(*cell.left_slot), "load_array");
            const auto& dose = enzyme_payload(droplet(*cell.right_slot), "load_array");
            const auto mixed =
                add_droplet(chem::nick_site_b(sol, dose, static_cast<std::uint64_t>(k_)));
            if (!skip_step_here(r, c, 6)) emit(EventKind::CoExitMix, r, c, mixed);
            cell.left_slot.reset();
            cell.right_slot.reset();
            cell.mixed = true;
            mixed_at_cell_[static_cast<std::size_t>(r) * k_ + c] = mixed;
        }
}

std::int64_t ArraySim::merge_row(int row) {
    std::vector<std::int64_t> mixed_ids;
    mixed_ids.reserve(static_cast<std::size_t>(k_));
    for (int c = 0; c < k_; ++c) {
        const Microcell& cell = cell_at(row, c);
        const auto& staged = mixed_at_cell_[static_cast<std::size_t>(row) * k_ + c];
        if (!cell.mixed || !staged)
            throw ProtocolError("row " + std::to_string(row) + " cell " +
                                std::to_string(c) + " has not mixed");
        mixed_ids.push_back(*staged);
    }

    const EventKind first = faults_.swap_merge_phases ? EventKind::MergeZOpen
                                                      : EventKind::MergeYOpen;
    const EventKind second = faults_.swap_merge_phases ? EventKind::MergeYOpen
                                                       : EventKind::MergeZOpen;

    // Phase Y: rightward flow walks every mixed droplet to the collector.
    advance_to(clock_ + kTransitTickS);
    emit(first, row, -1, -1);
    const double t_y = clock_;
    for (int c = k_ - 1; c >= 0; --c) {
        advance_to(t_y + (k_ - c) * kTransitTickS);
        emit(EventKind::MergeCollect, row, c, mixed_ids[static_cast<std::size_t>(c)]);
    }

    // Phase Z: upward flow; the merge channels are constructed so that every
    // droplet reaches the merge point at the same instant.
    advance_to(clock_ + kTransitTickS);
    emit(second, row, -1, -1);
    advance_to(clock_ + k_ * kTransitTickS);
    for (int c = 0; c < k_; ++c)
        emit(EventKind::MergeArrival, row, -1, mixed_ids[static_cast<std::size_t>(c)]);

    std::vector<chem::Solution> payloads;
    payloads.reserve(mixed_ids.size());
    for (auto id : mixed_ids)
        payloads.push_back(solution_payload(droplet(id), "merge_row"));
    const auto merged = add_droplet(chem::merge_solutions(payloads));
    emit(EventKind::MergeComplete, row, -1, merged);
    for (int c = 0; c < k_; ++c)
        mixed_at_cell_[static_cast<std::size_t>(row) * k_ + c].reset();
    merged_row_[merged] = row;
    return merged;
}

std::int64_t ArraySim::run_reaction_pipeline(std::int64_t merged_droplet,
                                             const chem::ActivationParams& activation,
                                             const chem::ErrorModel& err) {
    const auto& merged = solution_payload(droplet(merged_droplet), "reaction_pipeline");
    const auto row_it = merged_row_.find(merged_droplet);
    const int row = row_it == merged_row_.end() ? -1 : row_it->second;

    // 1) Gentle heat opens toeholds; probe strands displace the ssDNA.
    advance_to(clock_ + timing_.displacement_s);
    emit(EventKind::PipelineDisplacement, row, -1, merged_droplet);
    const auto pool = chem::probe_readout(merged, err);
    // 2) Threshold strands consume input ssDNA.
    advance_to(clock_ + timing_.threshold_s);
    emit(EventKind::PipelineThreshold, row, -1, merged_droplet);
    // 3) Seesaw gate with replenishment restores the signal.
    advance_to(clock_ + timing_.gate_s);
    emit(EventKind::PipelineGate, row, -1, merged_droplet);
    const auto out = chem::seesaw_activation(Fraction::clamped(pool.fraction()),
                                             activation, err);
    // 4) Output ssDNA untags bead-tagged enzyme; surplus is pulled down.
    advance_to(clock_ + timing_.translation_s);
    emit(EventKind::PipelineTranslation, row, -1, merged_droplet);
    const auto dose = chem::translate_to_enzyme(out, pool.reference_total(), err);
    // 5) The untagged enzyme nicks fresh strands at site A.
    advance_to(clock_ + timing_.nick_s);
    const double a = std::min(
        1.0, dose.concentration / static_cast<double>(pool.reference_total()));
    const auto fresh = chem::Solution::encode_fraction(
        Fraction::clamped(a), pool.reference_total(), merged.mode(),
        stream_seed(merged.seed(), 0x66726573ULL), merged.nick_template());
    const auto next = add_droplet(fresh);
    emit(EventKind::PipelineNick, row, -1, next);
    return next;
}

std::vector<std::int64_t> ArraySim::separate_droplet(std::int64_t droplet_id,
                                                     std::uint64_t k,
                                                     std::uint64_t seed) {
    if (k == 0)
        throw ArgumentError("separator needs k >= 1");
    const Droplet& d = droplet(droplet_id);
    std::vector<Payload> parts;
    if (const auto* sol = std::get_if<chem::Solution>(&d.payload)) {
        for (auto& s : chem::split_solution(*sol, k, seed)) parts.emplace_back(std::move(s));
    } else if (const auto* pool = std::get_if<chem::SsdnaPool>(&d.payload)) {
        for (auto& p : chem::split_pool(*pool, k, seed)) parts.emplace_back(std::move(p));
    } else {
        throw ArgumentError("separator cannot split an enzyme dose");
    }
    std::vector<std::int64_t> ids;
    ids.reserve(parts.size());
    // Pinching pressure at a regular interval: equally spaced emissions.
    for (auto& p : parts) {
        advance_to(clock_ + kTransitTickS);
        const auto id = add_droplet(std::move(p));
        emit(EventKind::SeparationEmit, -1, -1, id);
        ids.push_back(id);
    }
    return ids;
}

LayerRun simulate_layer(const std::vector<double>& inputs,
                        const std::vector<std::vector<double>>& weights,
                        const std::vector<chem::ActivationParams>& activation,
                        std::uint64_t molecules, chem::SampleMode mode,
                        std::uint64_t seed, const device::TimingConstants& timing,
                        const chem::ErrorModel& err, FaultInjection faults) {
    const auto k = inputs.size();
    if (k == 0)
        throw ArgumentError("layer needs at least one input");
    const auto n_out = weights.size();
    if (n_out == 0 || n_out > k)
        throw ArgumentError("layer needs between 1 and k rows of weights");
    for (const auto& row : weights)
        if (row.size() != k)
            throw ArgumentError("weight row length must match input count");
    if (activation.size() != 1 && activation.size() != n_out)
        throw ArgumentError("need one activation per row, or a single shared one");

    ArraySim sim(static_cast<int>(k), timing, faults);
    std::vector<std::int64_t> dna_ids, enzyme_ids;
    dna_ids.reserve(n_out * k);
    enzyme_ids.reserve(n_out * k);
    for (std::size_t i = 0; i < n_out; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            dna_ids.push_back(sim.add_droplet(chem::Solution::encode_fraction(
                Fraction(inputs[j]), molecules, mode,
                stream_seed(seed, i * k + j))));
            enzyme_ids.push_back(sim.add_droplet(chem::EnzymeDose{
                weights[i][j] * static_cast<double>(molecules) / static_cast<double>(k),
                /*tagged=*/false}));
        }
    sim.load_array(dna_ids, enzyme_ids, static_cast<int>(n_out));

    LayerRun run;
    for (std::size_t i = 0; i < n_out; ++i) {
        const auto& act = activation[activation.size() == 1 ? 0 : i];
        const auto merged = sim.merge_row(static_cast<int>(i));
        const auto& merged_sol =
            std::get<chem::Solution>(sim.droplet(merged).payload);
        const auto pool = chem::probe_readout(merged_sol, err);
        run.pre_activation.push_back(pool.fraction());
        run.output.push_back(
            chem::seesaw_activation(Fraction::clamped(pool.fraction()), act, err)
                .value());
        run.output_droplets.push_back(sim.run_reaction_pipeline(merged, act, err));
    }
    run.trace = sim.trace();
    return run;
}

} // namespace dnne::fluid
