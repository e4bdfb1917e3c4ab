#ifndef SNFA_COMPILER_HPP
#define SNFA_COMPILER_HPP

#include <cstdint>
#include <optional>
#include <string_view>

#include "snfa/automaton.hpp"

namespace snfa {

/// Knobs for pattern compilation.
struct CompileOptions {
    /// Deletion band: widest skip a single edge may take. nullopt = full
    /// band (pattern length - 1), which keeps every alignment reachable.
    /// Values beyond pattern length - 1 are clamped down to it.
    std::optional<std::uint32_t> d_max;
    /// When false, substitution states are omitted and substitutions are
    /// impossible; only matches, insertions and deletions remain.
    bool allow_mismatch = true;

    bool operator==(const CompileOptions&) const = default;
};

/// Compiles a pattern into a scored automaton whose best accepted path score
/// equals the pattern's best alignment score against the consumed input.
///
/// For a pattern P[1..m] the automaton holds, in id order, I_0 and then
/// M_i, X_i, I_i for i = 1..m (X_i only when mismatches are allowed):
///   - M_i matches exactly P[i], X_i matches everything but P[i], I_i
///     matches any byte and stands for insertions after position i.
///   - Every edge into M_j scores match, into X_j scores mismatch, into I_j
///     scores gap; an edge that skips k pattern positions adds k * gap.
///   - The start source reaches M_j / X_j for j within one band of the
///     front, plus I_0.
///   - Every state accepts, with an adjustment of gap per pattern position
///     left unconsumed, so trailing deletions need no extra cycles.
///
/// Throws EmptyPatternError for an empty pattern and ModelError when the
/// model is invalid. Deterministic: identical inputs give structurally
/// identical automata.
ScoredNfa compile_pattern(std::string_view pattern, const ScoreModel& model,
                          const CompileOptions& opts = {});

/// Same, with an explicit id and display name carried into reports and files.
ScoredNfa compile_pattern(std::uint32_t pattern_id, std::string_view name,
                          std::string_view pattern, const ScoreModel& model,
                          const CompileOptions& opts = {});

/// Largest out-degree over the start source and every state.
std::uint32_t max_fanout(const ScoredNfa& nfa);

/// Start-source out-degree (number of states with a start edge).
std::uint32_t start_fanout(const ScoredNfa& nfa);

/// Number of states: 3m+1 with mismatch states, 2m+1 without.
std::uint32_t state_count(const ScoredNfa& nfa);

/// Total edge count including start edges; the wire load the automaton puts
/// on an interconnect.
std::uint64_t wire_count(const ScoredNfa& nfa);

}  // namespace snfa

#endif  // SNFA_COMPILER_HPP
