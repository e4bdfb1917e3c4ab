#ifndef SNFA_AUTOMATON_HPP
#define SNFA_AUTOMATON_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "snfa/score.hpp"
#include "snfa/symbol_class.hpp"

namespace snfa {

/// What a state stands for in the pattern: a match of position i, a
/// substitution at position i, or an insertion after position i.
/// Metadata only; reports carry it so they are self-describing.
enum class RoleKind : std::uint8_t { Match, Mismatch, Insert };

struct StateRole {
    RoleKind kind = RoleKind::Insert;
    std::uint32_t position = 0;

    bool operator==(const StateRole&) const = default;
};

/// "M3", "X2", "I0".
std::string to_string(StateRole role);
std::optional<StateRole> parse_role(const std::string& text);

struct Edge {
    std::uint32_t target = 0;
    score_t score = 0;

    bool operator==(const Edge&) const = default;
};

/// One state of a scored homogeneous automaton: a symbol class, scored
/// out-edges, an optional scored edge from the implicit start source, and
/// accept metadata. The start source itself is not a state; it consumes no
/// symbols and appears only through start_edge_score fields.
struct Ste {
    std::uint32_t id = 0;
    SymbolClass symbol_class;
    StateRole role;
    std::vector<Edge> out_edges;
    std::optional<score_t> start_edge_score;
    bool accepting = false;
    /// Added to the propagated score at report time; encodes the pattern
    /// positions that remain unconsumed past this state.
    score_t accept_adjustment = 0;

    bool operator==(const Ste&) const = default;
};

/// A compiled pattern: states in dense id order plus the scoring model and
/// the deletion band the compiler resolved.
struct ScoredNfa {
    std::uint32_t pattern_id = 0;
    std::string name;
    std::string pattern;
    std::vector<Ste> states;
    ScoreModel model;
    /// Maximum consecutive skipped pattern positions a single edge may encode.
    std::uint32_t d_max = 0;

    std::uint32_t pattern_length() const { return static_cast<std::uint32_t>(pattern.size()); }

    bool operator==(const ScoredNfa&) const = default;
};

}  // namespace snfa

#endif  // SNFA_AUTOMATON_HPP
