#ifndef SNFA_PATHS_HPP
#define SNFA_PATHS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <utility>

#include "snfa/automaton.hpp"
#include "snfa/run_mode.hpp"

namespace snfa {

/// Exhaustive path oracle: walks every symbol-consuming path through the
/// automaton and returns the best accumulated score + accept adjustment over
/// accepting endpoints. Unbounded arithmetic, no saturation. Validates the
/// compiler and the engine jointly, so it shares nothing with the engine's
/// propagation loop.
///
/// Streaming: paths may begin at any input offset and end anywhere.
/// Global: paths begin at offset 0 and must consume the whole input; an
/// empty input yields the pure-deletion score m * gap, the same convention
/// the engine's global best query uses for the zero-cycle case.
///
/// Returns nullopt when no accepting path exists (streaming on empty input).
/// Throws InstanceTooLargeError beyond |input| <= 8 or 16 states.
std::optional<score_t> enumerate_paths(const ScoredNfa& nfa, std::string_view input,
                                       RunMode mode);

/// Per-endpoint view of the same walk: for every (state id, end offset)
/// reachable by a path, the best accumulated score + accept adjustment. Mode
/// only restricts where paths may begin, so this is exactly the report
/// stream an unclamped engine emits, keyed by (state, offset). Same guards.
std::map<std::pair<std::uint32_t, std::uint64_t>, score_t> enumerate_accept_scores(
    const ScoredNfa& nfa, std::string_view input, RunMode mode);

}  // namespace snfa

#endif  // SNFA_PATHS_HPP
