#include "snfa/engine.hpp"

#include <chrono>
#include <string>

namespace snfa {

Engine::Engine(const Placement& placement, RunMode mode)
    : mode_(mode),
      width_(placement.config.score_width),
      smin_(width_.min()),
      smax_(width_.max()),
      n_(static_cast<std::uint32_t>(placement.stats.states_used)),
      words_((n_ + 63) / 64) {
    edge_start_.assign(n_ + 1, 0);
    accept_bits_.assign(words_, 0);
    accept_adjust_.assign(n_, 0);
    pattern_of_.assign(n_, 0);
    local_id_.assign(n_, 0);
    role_of_.assign(n_, StateRole{});
    match_bits_.assign(static_cast<std::size_t>(256) * words_, 0);

    std::uint64_t total_edges = 0;
    for (const ScoredNfa& nfa : placement.automata) {
        for (const Ste& ste : nfa.states) total_edges += ste.out_edges.size();
    }
    edge_target_.reserve(total_edges);
    edge_score_.reserve(total_edges);

    for (std::size_t k = 0; k < placement.automata.size(); ++k) {
        const ScoredNfa& nfa = placement.automata[k];
        const std::uint32_t base = placement.slot_offsets[k];
        for (const Ste& ste : nfa.states) {
            const std::uint32_t slot = base + ste.id;
            pattern_of_[slot] = nfa.pattern_id;
            local_id_[slot] = ste.id;
            role_of_[slot] = ste.role;
            accept_adjust_[slot] = ste.accept_adjustment;
            if (ste.accepting) {
                accept_bits_[slot >> 6] |= std::uint64_t{1} << (slot & 63);
            }
            if (ste.start_edge_score) {
                start_arms_.push_back({slot, width_.clamp(*ste.start_edge_score)});
            }
            for (int b = 0; b < 256; ++b) {
                if (ste.symbol_class.matches(static_cast<std::uint8_t>(b))) {
                    match_bits_[static_cast<std::size_t>(b) * words_ + (slot >> 6)] |=
                        std::uint64_t{1} << (slot & 63);
                }
            }
            edge_start_[slot + 1] = static_cast<std::uint32_t>(ste.out_edges.size());
        }
    }
    for (std::uint32_t s = 0; s < n_; ++s) {
        edge_start_[s + 1] += edge_start_[s];
    }
    edge_target_.resize(total_edges);
    edge_score_.resize(total_edges);
    for (std::size_t k = 0; k < placement.automata.size(); ++k) {
        const ScoredNfa& nfa = placement.automata[k];
        const std::uint32_t base = placement.slot_offsets[k];
        for (const Ste& ste : nfa.states) {
            std::uint32_t e = edge_start_[base + ste.id];
            for (const Edge& edge : ste.out_edges) {
                edge_target_[e] = base + edge.target;
                edge_score_[e] = edge.score;
                ++e;
            }
        }
    }

    cur_bits_.assign(words_, 0);
    next_bits_.assign(words_, 0);
    cur_score_.assign(n_, 0);
    next_score_.assign(n_, 0);
}

void Engine::reset() {
    std::fill(cur_bits_.begin(), cur_bits_.end(), 0);
    std::fill(next_bits_.begin(), next_bits_.end(), 0);
    cycle_ = 0;
    finalized_ = false;
    log_.clear();
}

void Engine::reset(RunMode mode) {
    mode_ = mode;
    reset();
}

void Engine::step(std::uint8_t symbol) {
    step(symbol, [this](const Report& r) { log_.push_back(r); });
}

void Engine::finalize() {
    finalized_ = true;
}

std::uint64_t Engine::active_states() const {
    std::uint64_t n = 0;
    for (std::uint64_t w : cur_bits_) n += static_cast<std::uint64_t>(std::popcount(w));
    return n;
}

std::optional<score_t> Engine::activation(std::uint32_t slot) const {
    if (slot >= n_ || !test_bit(cur_bits_.data(), slot)) return std::nullopt;
    return cur_score_[slot];
}

std::vector<Report> run(const Placement& placement, std::string_view input, RunMode mode) {
    Engine engine(placement, mode);
    for (char c : input) {
        engine.step(static_cast<std::uint8_t>(static_cast<unsigned char>(c)));
    }
    engine.finalize();
    return engine.take_reports();
}

score_t best_global(std::span<const Report> reports, std::uint64_t input_len,
                    const ScoredNfa& nfa) {
    if (input_len == 0) {
        return static_cast<score_t>(nfa.pattern_length()) * nfa.model.gap_penalty;
    }
    bool found = false;
    score_t best = 0;
    for (const Report& r : reports) {
        if (r.pattern_id != nfa.pattern_id || r.input_offset != input_len - 1) continue;
        if (!found || r.score > best) {
            best = r.score;
            found = true;
        }
    }
    if (!found) {
        throw Error("no report at the final input offset for pattern " +
                    std::to_string(nfa.pattern_id));
    }
    return best;
}

std::optional<score_t> best_streaming(std::span<const Report> reports, const ScoredNfa& nfa) {
    std::optional<score_t> best;
    for (const Report& r : reports) {
        if (r.pattern_id != nfa.pattern_id) continue;
        if (!best || r.score > *best) best = r.score;
    }
    return best;
}

BenchStats throughput_bench(const Placement& placement, std::string_view input, RunMode mode) {
    Engine engine(placement, mode);
    std::uint64_t emitted = 0;
    auto counter = [&emitted](const Report&) { ++emitted; };

    const auto t0 = std::chrono::steady_clock::now();
    for (char c : input) {
        engine.step(static_cast<std::uint8_t>(static_cast<unsigned char>(c)), counter);
    }
    const auto t1 = std::chrono::steady_clock::now();
    engine.finalize();

    BenchStats stats;
    stats.symbols_processed = input.size();
    stats.elapsed_seconds = std::chrono::duration<double>(t1 - t0).count();
    stats.cycles = engine.cycle();
    stats.reports_emitted = emitted;
    stats.symbols_per_second = stats.elapsed_seconds > 0.0
                                   ? static_cast<double>(stats.symbols_processed) / stats.elapsed_seconds
                                   : 0.0;
    return stats;
}

}  // namespace snfa
