#ifndef SNFA_OVERLAY_HPP
#define SNFA_OVERLAY_HPP

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "snfa/automaton.hpp"
#include "snfa/compiler.hpp"
#include "snfa/score.hpp"

namespace snfa {

/// The hardware envelope a set of automata must fit into: state-slot
/// capacity, the fan-out an interconnect source may drive, and the global
/// wire budget of the grid. The wire budget is modelled as a total edge
/// count; the grid's routing itself is not simulated.
struct OverlayConfig {
    static constexpr std::uint32_t kMinArraySize = 1024;
    static constexpr std::uint32_t kMaxArraySize = 65536;

    std::uint32_t array_size = 8192;
    std::uint32_t max_fanout = 64;
    std::uint64_t max_global_wires = 1'000'000;
    ScoreWidth score_width{16};

    /// Throws std::invalid_argument when outside the supported envelope.
    void validate() const;

    bool operator==(const OverlayConfig&) const = default;
};

struct PlacementStats {
    std::uint64_t states_used = 0;
    std::uint32_t array_size = 0;
    /// states_used / array_size.
    double utilization = 0.0;
    /// Sum of all out-degrees, start edges included.
    std::uint64_t total_wires = 0;
    std::uint32_t max_fanout_observed = 0;
    /// Out-degree histogram over every fan-out source: all states plus each
    /// automaton's start source.
    std::map<std::uint32_t, std::uint64_t> fanout_histogram;

    bool operator==(const PlacementStats&) const = default;
};

/// Automata mapped onto consecutive slot ranges of one array. Immutable
/// once built; any number of engines may execute it concurrently.
struct Placement {
    std::vector<ScoredNfa> automata;
    /// Base slot of each automaton; automaton k owns
    /// [slot_offsets[k], slot_offsets[k] + state_count(automata[k])).
    std::vector<std::uint32_t> slot_offsets;
    PlacementStats stats;
    OverlayConfig config;
};

/// Places automata first-fit in input order starting at slot 0.
/// Succeeds iff all three constraints hold; otherwise throws PlacementError
/// with the observed value and the violated limit (CapacityExceeded,
/// FanoutExceeded — naming the offending source — or WireBudgetExceeded).
/// The fan-out check covers each automaton's start source first, then its
/// states in id order.
Placement place(std::span<const ScoredNfa> automata, const OverlayConfig& config);

/// The stats embedded in the placement; idempotent.
const PlacementStats& utilization_report(const Placement& placement);

}  // namespace snfa

#endif  // SNFA_OVERLAY_HPP
