#ifndef SNFA_DP_HPP
#define SNFA_DP_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "snfa/score.hpp"

namespace snfa {

/// (m+1) x (n+1) table of alignment scores; ground truth for the engine.
/// Unbounded integer arithmetic throughout — saturation is an engine concern.
struct DpMatrix {
    std::size_t rows = 0;  // pattern length + 1
    std::size_t cols = 0;  // input length + 1
    std::vector<score_t> h;

    score_t at(std::size_t i, std::size_t j) const { return h[i * cols + j]; }
    score_t& at(std::size_t i, std::size_t j) { return h[i * cols + j]; }
};

/// Full global-alignment table: H[i][0] = i*gap, H[0][j] = j*gap,
/// H[i][j] = max(diagonal + match/mismatch, above + gap, left + gap).
DpMatrix nw_matrix(std::string_view pattern, std::string_view input, const ScoreModel& model);

/// Global (whole pattern vs whole input) alignment score: H[m][n].
/// Throws EmptyPatternError when the pattern is empty.
score_t nw_global(std::string_view pattern, std::string_view input, const ScoreModel& model);

/// Pattern-global, input-local score: the whole pattern aligned against the
/// best window of the input, where a window consumes at least one input
/// symbol — the exact counterpart of a matcher that can only report when a
/// symbol arrives. Throws EmptyPatternError / EmptyInputError.
score_t glocal(std::string_view pattern, std::string_view input, const ScoreModel& model);

}  // namespace snfa

#endif  // SNFA_DP_HPP
