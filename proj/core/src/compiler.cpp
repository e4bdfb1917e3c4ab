#include "snfa/compiler.hpp"

#include <algorithm>
#include <cstdio>

#include "snfa/errors.hpp"

namespace snfa {

std::string to_string(StateRole role) {
    char letter = 'I';
    switch (role.kind) {
        case RoleKind::Match: letter = 'M'; break;
        case RoleKind::Mismatch: letter = 'X'; break;
        case RoleKind::Insert: letter = 'I'; break;
    }
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%c%u", letter, role.position);
    return buf;
}

std::optional<StateRole> parse_role(const std::string& text) {
    if (text.size() < 2) return std::nullopt;
    RoleKind kind;
    switch (text[0]) {
        case 'M': kind = RoleKind::Match; break;
        case 'X': kind = RoleKind::Mismatch; break;
        case 'I': kind = RoleKind::Insert; break;
        default: return std::nullopt;
    }
    std::uint32_t pos = 0;
    for (std::size_t i = 1; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') return std::nullopt;
        pos = pos * 10 + static_cast<std::uint32_t>(text[i] - '0');
    }
    return StateRole{kind, pos};
}

namespace {

// Dense id layout: I_0 first, then M_i, X_i, I_i per pattern position.
struct IdMap {
    bool with_mismatch;

    std::uint32_t insert(std::uint32_t i) const {
        if (i == 0) return 0;
        return with_mismatch ? 3 * i : 2 * i;
    }
    std::uint32_t match(std::uint32_t i) const {
        return with_mismatch ? 3 * (i - 1) + 1 : 2 * i - 1;
    }
    std::uint32_t mismatch(std::uint32_t i) const { return 3 * (i - 1) + 2; }
};

}  // namespace

ScoredNfa compile_pattern(std::uint32_t pattern_id, std::string_view name,
                          std::string_view pattern, const ScoreModel& model,
                          const CompileOptions& opts) {
    if (pattern.empty()) throw EmptyPatternError();
    model.validate();

    const auto m = static_cast<std::uint32_t>(pattern.size());
    const std::uint32_t d = std::min<std::uint32_t>(opts.d_max.value_or(m - 1), m - 1);
    const bool mm = opts.allow_mismatch;
    const IdMap ids{mm};

    const score_t a = model.match_bonus;
    const score_t x = model.mismatch_penalty;
    const score_t g = model.gap_penalty;

    ScoredNfa nfa;
    nfa.pattern_id = pattern_id;
    nfa.name = std::string(name);
    nfa.pattern = std::string(pattern);
    nfa.model = model;
    nfa.d_max = d;
    nfa.states.resize(mm ? 3 * m + 1 : 2 * m + 1);

    auto pattern_byte = [&](std::uint32_t i) {
        return static_cast<std::uint8_t>(pattern[i - 1]);
    };

    for (std::uint32_t i = 0; i <= m; ++i) {
        Ste& ins = nfa.states[ids.insert(i)];
        ins.id = ids.insert(i);
        ins.symbol_class = SymbolClass::any();
        ins.role = {RoleKind::Insert, i};
        ins.accepting = true;
        ins.accept_adjustment = static_cast<score_t>(m - i) * g;
    }
    for (std::uint32_t i = 1; i <= m; ++i) {
        Ste& match = nfa.states[ids.match(i)];
        match.id = ids.match(i);
        match.symbol_class = SymbolClass::single(pattern_byte(i));
        match.role = {RoleKind::Match, i};
        match.accepting = true;
        match.accept_adjustment = static_cast<score_t>(m - i) * g;
        if (mm) {
            Ste& sub = nfa.states[ids.mismatch(i)];
            sub.id = ids.mismatch(i);
            sub.symbol_class = SymbolClass::all_but(pattern_byte(i));
            sub.role = {RoleKind::Mismatch, i};
            sub.accepting = true;
            sub.accept_adjustment = static_cast<score_t>(m - i) * g;
        }
    }

    // Start edges: the band around the pattern front, plus I_0.
    for (std::uint32_t j = 1; j <= std::min(1 + d, m); ++j) {
        const score_t skip = static_cast<score_t>(j - 1) * g;
        nfa.states[ids.match(j)].start_edge_score = skip + a;
        if (mm) nfa.states[ids.mismatch(j)].start_edge_score = skip + x;
    }
    nfa.states[ids.insert(0)].start_edge_score = g;

    // Edges out of each consuming state: forward within the band, plus the
    // gap edge into that position's insert state.
    auto add_forward = [&](Ste& from, std::uint32_t i) {
        for (std::uint32_t j = i + 1; j <= std::min(i + 1 + d, m); ++j) {
            const score_t skip = static_cast<score_t>(j - i - 1) * g;
            from.out_edges.push_back({ids.match(j), skip + a});
            if (mm) from.out_edges.push_back({ids.mismatch(j), skip + x});
        }
    };
    for (std::uint32_t i = 1; i <= m; ++i) {
        Ste& match = nfa.states[ids.match(i)];
        add_forward(match, i);
        match.out_edges.push_back({ids.insert(i), g});
        if (mm) {
            Ste& sub = nfa.states[ids.mismatch(i)];
            add_forward(sub, i);
            sub.out_edges.push_back({ids.insert(i), g});
        }
    }
    for (std::uint32_t i = 0; i <= m; ++i) {
        Ste& ins = nfa.states[ids.insert(i)];
        ins.out_edges.push_back({ids.insert(i), g});
        add_forward(ins, i);
    }

    return nfa;
}

ScoredNfa compile_pattern(std::string_view pattern, const ScoreModel& model,
                          const CompileOptions& opts) {
    return compile_pattern(0, "", pattern, model, opts);
}

std::uint32_t start_fanout(const ScoredNfa& nfa) {
    std::uint32_t n = 0;
    for (const Ste& s : nfa.states) {
        if (s.start_edge_score) ++n;
    }
    return n;
}

std::uint32_t max_fanout(const ScoredNfa& nfa) {
    std::uint32_t best = start_fanout(nfa);
    for (const Ste& s : nfa.states) {
        best = std::max(best, static_cast<std::uint32_t>(s.out_edges.size()));
    }
    return best;
}

std::uint32_t state_count(const ScoredNfa& nfa) {
    return static_cast<std::uint32_t>(nfa.states.size());
}

std::uint64_t wire_count(const ScoredNfa& nfa) {
    std::uint64_t wires = start_fanout(nfa);
    for (const Ste& s : nfa.states) wires += s.out_edges.size();
    return wires;
}

}  // namespace snfa
