#include "dnne/trace.hpp"

#include "dnne/errors.hpp"

#include <array>
#include <charconv>
#include <map>
#include <sstream>
#include <tuple>

namespace dnne::fluid {

namespace {

constexpr std::array<const char*, 19> kKindNames = {
    "valve_r_close_l_open", "dna_transit", "dna_load_left", "valve_l_close_r_open",
    "enzyme_transit", "enzyme_load_right", "valves_both_open", "co_exit_mix",
    "merge_y_open", "merge_collect", "merge_z_open", "merge_arrival",
    "merge_complete", "pipeline_displacement", "pipeline_threshold",
    "pipeline_gate", "pipeline_translation", "pipeline_nick", "separation_emit",
};

std::string format_double(double v) {
    std::array<char, 32> buf;
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

} // namespace

const char* event_kind_name(EventKind k) { return kKindNames[static_cast<int>(k)]; }

std::optional<EventKind> event_kind_from_name(const std::string& name) {
    for (std::size_t i = 0; i < kKindNames.size(); ++i)
        if (name == kKindNames[i]) return static_cast<EventKind>(i);
    return std::nullopt;
}

std::string Trace::to_text() const {
    std::ostringstream out;
    out << "dnne-trace 1 rows=" << rows << " cols=" << cols << '\n';
    for (const auto& e : events) {
        out << format_double(e.time_s) << ' ' << event_kind_name(e.kind) << ' '
            << e.row << ' ' << e.col << ' ' << e.droplet << '\n';
    }
    return out.str();
}

Trace Trace::from_text(const std::string& text) {
    std::istringstream in(text);
    std::string header;
    if (!std::getline(in, header))
        throw FormatError("empty trace");
    std::istringstream hs(header);
    std::string magic;
    int version = 0;
    std::string rows_kv, cols_kv;
    hs >> magic >> version >> rows_kv >> cols_kv;
    if (magic != "dnne-trace" || version != 1 || rows_kv.rfind("rows=", 0) != 0 ||
        cols_kv.rfind("cols=", 0) != 0)
        throw FormatError("bad trace header: " + header);
    Trace t;
    t.rows = std::stoi(rows_kv.substr(5));
    t.cols = std::stoi(cols_kv.substr(5));
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string kind_name;
        Event e;
        if (!(ls >> e.time_s >> kind_name >> e.row >> e.col >> e.droplet))
            throw FormatError("bad trace record: " + line);
        auto kind = event_kind_from_name(kind_name);
        if (!kind)
            throw FormatError("unknown event kind: " + kind_name);
        e.kind = *kind;
        t.events.push_back(e);
    }
    return t;
}

namespace {

// The six per-cell protocol steps in required order.
constexpr std::array<EventKind, 6> kMicrocellSteps = {
    EventKind::ValveRCloseLOpen, EventKind::DnaLoadLeft, EventKind::ValveLCloseROpen,
    EventKind::EnzymeLoadRight,  EventKind::ValvesBothOpen, EventKind::CoExitMix,
};

std::string cell_str(int row, int col) {
    return "(" + std::to_string(row) + "," + std::to_string(col) + ")";
}

} // namespace

std::optional<Violation> validate_trace(const Trace& trace) {
    // clock-monotonic
    double prev = -1.0;
    for (const auto& e : trace.events) {
        if (e.time_s < prev)
            return Violation{"clock-monotonic",
                             "time " + format_double(e.time_s) + " after " +
                                 format_double(prev)};
        prev = e.time_s;
    }

    // slot-occupancy: loads must alternate with exits per slot.
    std::map<std::tuple<int, int, char>, std::int64_t> occupied; // -1 = free
    auto slot_load = [&](int row, int col, char side,
                         std::int64_t droplet) -> std::optional<Violation> {
        auto key = std::make_tuple(row, col, side);
        auto it = occupied.find(key);
        if (it != occupied.end() && it->second != -1)
            return Violation{"slot-occupancy",
                             "cell " + cell_str(row, col) + " slot " + side +
                                 " already holds droplet " +
                                 std::to_string(it->second)};
        occupied[key] = droplet;
        return std::nullopt;
    };
    for (const auto& e : trace.events) {
        if (e.kind == EventKind::DnaLoadLeft) {
            if (auto v = slot_load(e.row, e.col, 'L', e.droplet)) return v;
        } else if (e.kind == EventKind::EnzymeLoadRight) {
            if (auto v = slot_load(e.row, e.col, 'R', e.droplet)) return v;
        } else if (e.kind == EventKind::CoExitMix) {
            occupied[std::make_tuple(e.row, e.col, 'L')] = -1;
            occupied[std::make_tuple(e.row, e.col, 'R')] = -1;
        }
    }

    // microcell-grammar: per cell the six steps appear exactly once, in order.
    std::map<std::pair<int, int>, std::size_t> step_progress;
    for (const auto& e : trace.events) {
        bool is_step = false;
        for (auto k : kMicrocellSteps)
            if (e.kind == k) is_step = true;
        if (!is_step) continue;
        auto key = std::make_pair(e.row, e.col);
        auto& next = step_progress[key];
        if (next >= kMicrocellSteps.size() || e.kind != kMicrocellSteps[next])
            return Violation{"microcell-grammar",
                             "cell " + cell_str(e.row, e.col) + " saw " +
                                 event_kind_name(e.kind) + " at step " +
                                 std::to_string(next + 1)};
        ++next;
    }
    for (const auto& [cell, progress] : step_progress)
        if (progress != kMicrocellSteps.size())
            return Violation{"microcell-grammar",
                             "cell " + cell_str(cell.first, cell.second) +
                                 " stopped after step " + std::to_string(progress)};

    // merge-grammar + equal-path, per row.
    struct RowMerge {
        bool y_open = false;
        bool z_open = false;
        std::vector<double> arrivals;
        bool complete = false;
    };
    std::map<int, RowMerge> merges;
    for (const auto& e : trace.events) {
        switch (e.kind) {
            case EventKind::MergeYOpen:
                merges[e.row].y_open = true;
                break;
            case EventKind::MergeZOpen: {
                auto& m = merges[e.row];
                if (!m.y_open)
                    return Violation{"merge-grammar", "row " + std::to_string(e.row) +
                                                          ": Z opened before Y"};
                m.z_open = true;
                break;
            }
            case EventKind::MergeCollect: {
                auto& m = merges[e.row];
                if (!m.y_open || m.z_open)
                    return Violation{"merge-grammar",
                                     "row " + std::to_string(e.row) +
                                         ": collect outside phase Y"};
                break;
            }
            case EventKind::MergeArrival: {
                auto& m = merges[e.row];
                if (!m.z_open)
                    return Violation{"merge-grammar", "row " + std::to_string(e.row) +
                                                          ": arrival before phase Z"};
                m.arrivals.push_back(e.time_s);
                break;
            }
            case EventKind::MergeComplete: {
                auto& m = merges[e.row];
                if (!m.z_open || m.arrivals.empty())
                    return Violation{"merge-grammar",
                                     "row " + std::to_string(e.row) +
                                         ": completion without arrivals"};
                m.complete = true;
                break;
            }
            default:
                break;
        }
    }
    for (const auto& [row, m] : merges) {
        for (double t : m.arrivals)
            if (t != m.arrivals.front())
                return Violation{"equal-path",
                                 "row " + std::to_string(row) +
                                     ": merge arrivals at unequal times"};
    }

    // segment-exclusion: transit/load/collect events occupy (segment, time).
    std::map<std::tuple<double, int, int, char>, std::int64_t> at;
    auto occupy = [&](double t, int row, int col, char chan,
                      std::int64_t droplet) -> std::optional<Violation> {
        auto key = std::make_tuple(t, row, col, chan);
        auto [it, inserted] = at.emplace(key, droplet);
        if (!inserted && it->second != droplet)
            return Violation{"segment-exclusion",
                             "droplets " + std::to_string(it->second) + " and " +
                                 std::to_string(droplet) + " share segment " +
                                 cell_str(row, col) + chan + " at t=" +
                                 format_double(t)};
        return std::nullopt;
    };
    for (const auto& e : trace.events) {
        std::optional<Violation> v;
        switch (e.kind) {
            case EventKind::DnaTransit:
            case EventKind::DnaLoadLeft:
                v = occupy(e.time_s, e.row, e.col, 'L', e.droplet);
                break;
            case EventKind::EnzymeTransit:
            case EventKind::EnzymeLoadRight:
                v = occupy(e.time_s, e.row, e.col, 'R', e.droplet);
                break;
            case EventKind::CoExitMix:
            case EventKind::MergeCollect:
                v = occupy(e.time_s, e.row, e.col, 'C', e.droplet);
                break;
            default:
                break;
        }
        if (v) return v;
    }

    return std::nullopt;
}

} // namespace dnne::fluid
