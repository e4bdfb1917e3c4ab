#ifndef SNFA_ENGINE_HPP
#define SNFA_ENGINE_HPP

#include <bit>
#include <concepts>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "snfa/automaton.hpp"
#include "snfa/errors.hpp"
#include "snfa/overlay.hpp"
#include "snfa/run_mode.hpp"
#include "snfa/score.hpp"

namespace snfa {

/// One accepting activation: state `ste_id` of pattern `pattern_id` was
/// active after consuming the symbol at `input_offset`, and its activation
/// score plus accept adjustment came to `score`.
struct Report {
    std::uint32_t pattern_id = 0;
    std::uint32_t ste_id = 0;
    StateRole role;
    std::uint64_t input_offset = 0;
    score_t score = 0;

    bool operator==(const Report&) const = default;
};

/// Cycle-accurate executor for a placed array.
///
/// Each step consumes one input symbol. A state is active after the step
/// iff its symbol class matches the symbol and at least one contribution
/// arrived: from an active predecessor (its score plus the edge score) or
/// from the start source (the start edge score, armed every cycle in
/// Streaming mode and only at cycle 0 in Global mode). Concurrent
/// contributions combine by max; every addition saturates at the placed
/// score width. Accepting activations emit one report per cycle, scanned
/// in ascending slot order, so reports sort by (input_offset, placement
/// order, state id) without post-processing.
///
/// The constructor snapshots the placement; the engine holds no reference
/// to it afterwards. One engine is single-threaded; run several engines
/// over the same placement for parallelism.
class Engine {
public:
    Engine(const Placement& placement, RunMode mode);

    /// Clears all run state (frontier, cycle counter, report log) and
    /// re-arms; the compiled tables are kept. Reuse one engine across
    /// sequences instead of rebuilding.
    void reset();
    void reset(RunMode mode);

    /// One cycle. Emits each report to `sink` instead of the internal log.
    template <std::invocable<const Report&> Sink>
    void step(std::uint8_t symbol, Sink&& sink) {
        if (finalized_) {
            throw Error("step after finalize");
        }
        const std::uint64_t* match = match_bits_.data() +
                                     static_cast<std::size_t>(symbol) * words_;
        std::fill(next_bits_.begin(), next_bits_.end(), 0);

        if (mode_ == RunMode::Streaming || cycle_ == 0) {
            for (const StartArm& arm : start_arms_) {
                if (test_bit(match, arm.slot)) {
                    contribute(arm.slot, arm.score);
                }
            }
        }

        for (std::uint32_t w = 0; w < words_; ++w) {
            std::uint64_t live = cur_bits_[w];
            while (live != 0) {
                const std::uint32_t s = w * 64 + static_cast<std::uint32_t>(std::countr_zero(live));
                live &= live - 1;
                const score_t base = cur_score_[s];
                const std::uint32_t end = edge_start_[s + 1];
                for (std::uint32_t e = edge_start_[s]; e < end; ++e) {
                    const std::uint32_t t = edge_target_[e];
                    if (test_bit(match, t)) {
                        contribute(t, sat(base, edge_score_[e]));
                    }
                }
            }
        }

        cur_bits_.swap(next_bits_);
        cur_score_.swap(next_score_);

        for (std::uint32_t w = 0; w < words_; ++w) {
            std::uint64_t live = cur_bits_[w] & accept_bits_[w];
            while (live != 0) {
                const std::uint32_t s = w * 64 + static_cast<std::uint32_t>(std::countr_zero(live));
                live &= live - 1;
                sink(Report{pattern_of_[s], local_id_[s], role_of_[s], cycle_,
                            sat(cur_score_[s], accept_adjust_[s])});
            }
        }
        ++cycle_;
    }

    /// One cycle; reports append to the internal log.
    void step(std::uint8_t symbol);

    /// Marks the run complete; further steps throw.
    void finalize();
    bool finalized() const { return finalized_; }

    const std::vector<Report>& reports() const { return log_; }
    std::vector<Report> take_reports() { return std::move(log_); }

    RunMode mode() const { return mode_; }
    /// Cycles executed so far; equals the next input offset.
    std::uint64_t cycle() const { return cycle_; }
    std::uint32_t state_count() const { return n_; }

    /// Number of currently active states.
    std::uint64_t active_states() const;
    /// Activation score of a slot after the last step, if active.
    std::optional<score_t> activation(std::uint32_t slot) const;

private:
    struct StartArm {
        std::uint32_t slot;
        score_t score;
    };

    static bool test_bit(const std::uint64_t* bits, std::uint32_t i) {
        return (bits[i >> 6] >> (i & 63)) & 1u;
    }

    score_t sat(score_t a, score_t b) const {
        const __int128 sum = static_cast<__int128>(a) + b;
        if (sum < smin_) return smin_;
        if (sum > smax_) return smax_;
        return static_cast<score_t>(sum);
    }

    void contribute(std::uint32_t t, score_t v) {
        const std::uint32_t w = t >> 6;
        const std::uint64_t bit = std::uint64_t{1} << (t & 63);
        if (next_bits_[w] & bit) {
            if (v > next_score_[t]) next_score_[t] = v;
        } else {
            next_bits_[w] |= bit;
            next_score_[t] = v;
        }
    }

    RunMode mode_;
    ScoreWidth width_;
    score_t smin_;
    score_t smax_;
    std::uint32_t n_ = 0;
    std::uint32_t words_ = 0;

    std::vector<std::uint64_t> match_bits_;
    std::vector<std::uint32_t> edge_start_;
    std::vector<std::uint32_t> edge_target_;
    std::vector<score_t> edge_score_;
    std::vector<StartArm> start_arms_;
    std::vector<std::uint64_t> accept_bits_;
    std::vector<score_t> accept_adjust_;
    std::vector<std::uint32_t> pattern_of_;
    std::vector<std::uint32_t> local_id_;
    std::vector<StateRole> role_of_;

    std::vector<std::uint64_t> cur_bits_;
    std::vector<std::uint64_t> next_bits_;
    std::vector<score_t> cur_score_;
    std::vector<score_t> next_score_;
    std::uint64_t cycle_ = 0;
    bool finalized_ = false;
    std::vector<Report> log_;
};

/// Steps every byte of `input` through a fresh engine and returns the
/// finalized report log.
std::vector<Report> run(const Placement& placement, std::string_view input, RunMode mode);

/// Best end-to-end score for one pattern from a Global-mode report log:
/// the maximum over reports at the final input offset. Empty input aligns
/// the whole pattern against nothing, scoring pattern_length * gap.
score_t best_global(std::span<const Report> reports, std::uint64_t input_len,
                    const ScoredNfa& nfa);

/// Best windowed score for one pattern from a Streaming-mode report log:
/// the maximum over all its reports, or nullopt when none fired.
std::optional<score_t> best_streaming(std::span<const Report> reports, const ScoredNfa& nfa);

struct BenchStats {
    std::uint64_t symbols_processed = 0;
    double elapsed_seconds = 0.0;
    double symbols_per_second = 0.0;
    std::uint64_t cycles = 0;
    std::uint64_t reports_emitted = 0;
};

/// Times the step loop alone over a counting sink; construction and
/// teardown stay outside the measured window.
BenchStats throughput_bench(const Placement& placement, std::string_view input, RunMode mode);

}  // namespace snfa

#endif  // SNFA_ENGINE_HPP
