#ifndef SNFA_RUN_MODE_HPP
#define SNFA_RUN_MODE_HPP

namespace snfa {

/// Streaming: the start source is armed on every cycle, so an alignment may
/// begin at any input offset and the best score may end anywhere — matching
/// against windows of the input.
/// Global: the start source is armed on cycle 0 only; querying the final
/// offset gives whole-input alignment scores.
enum class RunMode { Streaming, Global };

}  // namespace snfa

#endif  // SNFA_RUN_MODE_HPP
