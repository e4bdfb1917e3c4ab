#include "snfa/overlay.hpp"

#include <stdexcept>
#include <string>

#include "snfa/errors.hpp"

namespace snfa {

void OverlayConfig::validate() const {
    if (array_size < kMinArraySize || array_size > kMaxArraySize) {
        throw std::invalid_argument("array_size " + std::to_string(array_size) +
                                    " outside [" + std::to_string(kMinArraySize) + ", " +
                                    std::to_string(kMaxArraySize) + "]");
    }
    if (max_fanout == 0) {
        throw std::invalid_argument("max_fanout must be positive");
    }
    if (max_global_wires == 0) {
        throw std::invalid_argument("max_global_wires must be positive");
    }
}

namespace {

std::uint32_t start_fanout_of(const ScoredNfa& nfa) {
    std::uint32_t n = 0;
    for (const Ste& ste : nfa.states) {
        if (ste.start_edge_score.has_value()) ++n;
    }
    return n;
}

[[noreturn]] void throw_fanout(std::uint32_t automaton_index,
                               std::optional<std::uint32_t> state_id,
                               std::uint32_t observed, std::uint32_t limit) {
    std::string source = state_id ? "state " + std::to_string(*state_id)
                                  : "start source";
    PlacementError err(PlacementError::Kind::FanoutExceeded,
                       "fan-out " + std::to_string(observed) + " of " + source +
                           " in automaton " + std::to_string(automaton_index) +
                           " exceeds limit " + std::to_string(limit),
                       observed, limit);
    err.set_fanout_source(automaton_index, state_id);
    throw err;
}

}  // namespace

Placement place(std::span<const ScoredNfa> automata, const OverlayConfig& config) {
    config.validate();

    Placement p;
    p.config = config;
    p.automata.assign(automata.begin(), automata.end());
    p.slot_offsets.reserve(automata.size());

    PlacementStats& st = p.stats;
    st.array_size = config.array_size;

    std::uint64_t next_slot = 0;
    for (std::size_t k = 0; k < automata.size(); ++k) {
        const ScoredNfa& nfa = automata[k];
        const auto index = static_cast<std::uint32_t>(k);

        const std::uint32_t start_deg = start_fanout_of(nfa);
        if (start_deg > config.max_fanout) {
            throw_fanout(index, std::nullopt, start_deg, config.max_fanout);
        }
        for (const Ste& ste : nfa.states) {
            const auto deg = static_cast<std::uint32_t>(ste.out_edges.size());
            if (deg > config.max_fanout) {
                throw_fanout(index, ste.id, deg, config.max_fanout);
            }
        }

        const std::uint64_t need = nfa.states.size();
        if (next_slot + need > config.array_size) {
            throw PlacementError(
                PlacementError::Kind::CapacityExceeded,
                "placing automaton " + std::to_string(k) + " needs " +
                    std::to_string(next_slot + need) + " slots, array has " +
                    std::to_string(config.array_size),
                static_cast<std::int64_t>(next_slot + need), config.array_size);
        }

        std::uint64_t wires = start_deg;
        for (const Ste& ste : nfa.states) wires += ste.out_edges.size();
        if (st.total_wires + wires > config.max_global_wires) {
            throw PlacementError(
                PlacementError::Kind::WireBudgetExceeded,
                "placing automaton " + std::to_string(k) + " needs " +
                    std::to_string(st.total_wires + wires) + " wires, budget is " +
                    std::to_string(config.max_global_wires),
                static_cast<std::int64_t>(st.total_wires + wires),
                static_cast<std::int64_t>(config.max_global_wires));
        }

        p.slot_offsets.push_back(static_cast<std::uint32_t>(next_slot));
        next_slot += need;
        st.total_wires += wires;

        ++st.fanout_histogram[start_deg];
        if (start_deg > st.max_fanout_observed) st.max_fanout_observed = start_deg;
        for (const Ste& ste : nfa.states) {
            const auto deg = static_cast<std::uint32_t>(ste.out_edges.size());
            ++st.fanout_histogram[deg];
            if (deg > st.max_fanout_observed) st.max_fanout_observed = deg;
        }
    }

    st.states_used = next_slot;
    st.utilization = static_cast<double>(next_slot) / static_cast<double>(config.array_size);
    return p;
}

const PlacementStats& utilization_report(const Placement& placement) {
    return placement.stats;
}

}  // namespace snfa
