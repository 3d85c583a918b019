#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dnne::fluid {

enum class EventKind {
    ValveRCloseLOpen,  // microcell step 1
    DnaTransit,        // DNA droplet passing through a cell's left channel
    DnaLoadLeft,       // microcell step 2
    ValveLCloseROpen,  // microcell step 3
    EnzymeTransit,     // enzyme droplet passing through a right channel
    EnzymeLoadRight,   // microcell step 4
    ValvesBothOpen,    // microcell step 5
    CoExitMix,         // microcell step 6
    MergeYOpen,        // merge phase Y begins for a row
    MergeCollect,      // droplet staged at a row collector segment
    MergeZOpen,        // merge phase Z begins for a row
    MergeArrival,      // droplet reaches the row merge point
    MergeComplete,     // merged droplet created
    PipelineDisplacement,
    PipelineThreshold,
    PipelineGate,
    PipelineTranslation,
    PipelineNick,
    SeparationEmit,    // separator emits one split droplet
};

const char* event_kind_name(EventKind k);
std::optional<EventKind> event_kind_from_name(const std::string& name);

/// One timed record. row/col are -1 where not applicable; droplet is -1 for
/// valve/phase events that involve no specific droplet.
struct Event {
    double time_s = 0.0;
    EventKind kind = EventKind::ValveRCloseLOpen;
    int row = -1;
    int col = -1;
    std::int64_t droplet = -1;
};

/// Append-only, time-ordered event log for one array run.
///
/// Text form ("dnne-trace" version 1): a header line
///   dnne-trace 1 rows=<r> cols=<k>
/// followed by one line per event:
///   <time_s> <event_kind> <row> <col> <droplet_id>
/// Times are printed with shortest round-trip formatting, so logs are
/// byte-identical for identical runs.
struct Trace {
    int rows = 0;
    int cols = 0;
    std::vector<Event> events;

    std::string to_text() const;
    static Trace from_text(const std::string& text);
};

/// First protocol violation found in a trace, if any.
struct Violation {
    std::string rule;   // machine-readable rule name
    std::string detail; // human-readable context
};

/// Validate a trace against the protocol grammars using only the log itself:
///   microcell-grammar : per cell, the six steps appear exactly once, in order
///   merge-grammar     : per row, phase Y opens before phase Z, arrivals and
///                       completion only after their phases
///   equal-path        : per row, all merge arrivals share one timestamp
///   slot-occupancy    : a microcell slot is never loaded twice without an exit
///   segment-exclusion : no channel segment holds two droplets at one timestamp
///   clock-monotonic   : event times never decrease
std::optional<Violation> validate_trace(const Trace& trace);

} // namespace dnne::fluid
