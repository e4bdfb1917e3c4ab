#ifndef SNFA_AUTOMATON_IO_HPP
#define SNFA_AUTOMATON_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "snfa/automaton.hpp"
#include "snfa/compiler.hpp"
#include "snfa/score.hpp"

namespace snfa {

inline constexpr int kAutomatonFormatVersion = 1;

/// On-disk bundle: the scoring model and compile options alongside the
/// automata they produced. States carry everything the engine needs, so a
/// parsed file runs without recompiling.
struct AutomatonFile {
    ScoreModel model;
    CompileOptions options;
    std::vector<ScoredNfa> automata;

    bool operator==(const AutomatonFile&) const = default;
};

/// JSON text with an explicit format_version. Symbol classes appear as
/// "ANY", {"not": byte}, or a sorted byte list. Deterministic: identical
/// bundles serialize to identical bytes.
std::string serialize_automata(const AutomatonFile& file);

/// Throws AutomatonFileError on malformed JSON, an unknown format_version,
/// or records that fail validation (bad roles, byte values, edge targets,
/// non-dense state ids, an invalid model). parse(serialize(f)) == f.
AutomatonFile parse_automata(std::string_view text);

}  // namespace snfa

#endif  // SNFA_AUTOMATON_IO_HPP
