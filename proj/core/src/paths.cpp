#include "snfa/paths.hpp"

#include <algorithm>
#include <string>

#include "snfa/errors.hpp"

namespace snfa {

namespace {

constexpr std::size_t kMaxInputLen = 8;
constexpr std::size_t kMaxStates = 16;

struct Walker {
    const ScoredNfa& nfa;
    std::string_view input;
    // Flat (state, offset) cells; the DFS itself stays exhaustive.
    std::vector<score_t> best;
    std::vector<char> seen;

    void record(std::uint32_t state, std::uint64_t offset, score_t acc) {
        const Ste& s = nfa.states[state];
        if (!s.accepting) return;
        const score_t total = acc + s.accept_adjustment;
        const std::size_t idx = state * input.size() + offset;
        if (!seen[idx] || total > best[idx]) {
            seen[idx] = 1;
            best[idx] = total;
        }
    }

    // Entered with `state` having consumed input[offset] at accumulated
    // score `acc`.
    void walk(std::uint32_t state, std::uint64_t offset, score_t acc) {
        record(state, offset, acc);
        if (offset + 1 >= input.size()) return;
        const auto next_byte = static_cast<std::uint8_t>(input[offset + 1]);
        for (const Edge& e : nfa.states[state].out_edges) {
            if (nfa.states[e.target].symbol_class.matches(next_byte)) {
                walk(e.target, offset + 1, acc + e.score);
            }
        }
    }

    void arm(std::uint64_t offset) {
        const auto b = static_cast<std::uint8_t>(input[offset]);
        for (const Ste& s : nfa.states) {
            if (s.start_edge_score && s.symbol_class.matches(b)) {
                walk(s.id, offset, *s.start_edge_score);
            }
        }
    }
};

void check_guards(const ScoredNfa& nfa, std::string_view input) {
    if (input.size() > kMaxInputLen) {
        throw InstanceTooLargeError("path enumeration limited to inputs of length " +
                                    std::to_string(kMaxInputLen));
    }
    if (nfa.states.size() > kMaxStates) {
        throw InstanceTooLargeError("path enumeration limited to automata with " +
                                    std::to_string(kMaxStates) + " states");
    }
}

}  // namespace

std::map<std::pair<std::uint32_t, std::uint64_t>, score_t> enumerate_accept_scores(
    const ScoredNfa& nfa, std::string_view input, RunMode mode) {
    check_guards(nfa, input);
    Walker w{nfa, input, {}, {}};
    w.best.resize(nfa.states.size() * input.size());
    w.seen.assign(nfa.states.size() * input.size(), 0);
    if (!input.empty()) {
        if (mode == RunMode::Global) {
            w.arm(0);
        } else {
            for (std::uint64_t t = 0; t < input.size(); ++t) w.arm(t);
        }
    }
    std::map<std::pair<std::uint32_t, std::uint64_t>, score_t> out;
    for (std::uint32_t s = 0; s < nfa.states.size(); ++s) {
        for (std::uint64_t t = 0; t < input.size(); ++t) {
            const std::size_t idx = s * input.size() + t;
            if (w.seen[idx]) out.emplace(std::make_pair(s, t), w.best[idx]);
        }
    }
    return out;
}

std::optional<score_t> enumerate_paths(const ScoredNfa& nfa, std::string_view input,
                                       RunMode mode) {
    check_guards(nfa, input);
    if (input.empty()) {
        if (mode == RunMode::Global) {
            // Zero cycles: the only alignment deletes the whole pattern.
            return static_cast<score_t>(nfa.pattern.size()) * nfa.model.gap_penalty;
        }
        return std::nullopt;
    }
    const auto best = enumerate_accept_scores(nfa, input, mode);
    std::optional<score_t> top;
    for (const auto& [key, v] : best) {
        // Global scores only alignments that consume the whole input.
        if (mode == RunMode::Global && key.second + 1 != input.size()) continue;
        if (!top || v > *top) top = v;
    }
    return top;
}

}  // namespace snfa
