#include "snfa/dp.hpp"

#include <algorithm>

#include "snfa/errors.hpp"

namespace snfa {

namespace {

// Low enough to act as -infinity, high enough that adding penalties to it
// cannot underflow.
constexpr score_t kNegInf = std::numeric_limits<score_t>::min() / 4;

score_t substitution(std::uint8_t p, std::uint8_t s, const ScoreModel& model) {
    return p == s ? model.match_bonus : model.mismatch_penalty;
}

}  // namespace

DpMatrix nw_matrix(std::string_view pattern, std::string_view input, const ScoreModel& model) {
    if (pattern.empty()) throw EmptyPatternError();
    const std::size_t m = pattern.size();
    const std::size_t n = input.size();
    const score_t g = model.gap_penalty;

    DpMatrix dp;
    dp.rows = m + 1;
    dp.cols = n + 1;
    dp.h.resize(dp.rows * dp.cols);

    for (std::size_t i = 0; i <= m; ++i) dp.at(i, 0) = static_cast<score_t>(i) * g;
    for (std::size_t j = 0; j <= n; ++j) dp.at(0, j) = static_cast<score_t>(j) * g;
    for (std::size_t i = 1; i <= m; ++i) {
        const auto p = static_cast<std::uint8_t>(pattern[i - 1]);
        for (std::size_t j = 1; j <= n; ++j) {
            const auto s = static_cast<std::uint8_t>(input[j - 1]);
            dp.at(i, j) = std::max({dp.at(i - 1, j - 1) + substitution(p, s, model),
                                    dp.at(i - 1, j) + g, dp.at(i, j - 1) + g});
        }
    }
    return dp;
}

score_t nw_global(std::string_view pattern, std::string_view input, const ScoreModel& model) {
    if (pattern.empty()) throw EmptyPatternError();
    const std::size_t m = pattern.size();
    const std::size_t n = input.size();
    const score_t g = model.gap_penalty;

    // Two-row rolling variant of nw_matrix.
    std::vector<score_t> prev(n + 1), cur(n + 1);
    for (std::size_t j = 0; j <= n; ++j) prev[j] = static_cast<score_t>(j) * g;
    for (std::size_t i = 1; i <= m; ++i) {
        const auto p = static_cast<std::uint8_t>(pattern[i - 1]);
        cur[0] = static_cast<score_t>(i) * g;
        for (std::size_t j = 1; j <= n; ++j) {
            const auto s = static_cast<std::uint8_t>(input[j - 1]);
            cur[j] = std::max({prev[j - 1] + substitution(p, s, model), prev[j] + g,
                               cur[j - 1] + g});
        }
        std::swap(prev, cur);
    }
    return prev[n];
}

score_t glocal(std::string_view pattern, std::string_view input, const ScoreModel& model) {
    if (pattern.empty()) throw EmptyPatternError();
    if (input.empty()) throw EmptyInputError();
    const std::size_t m = pattern.size();
    const std::size_t n = input.size();
    const score_t g = model.gap_penalty;

    // H[i][j]: best score of the whole of P[1..i] against a window of the
    // input ending at j that has consumed at least one symbol. A window may
    // open fresh at any offset, which shows up as the (i-1)*g / i*g
    // alternatives: the positions already passed when the window opens are
    // charged as leading deletions. Zero-symbol windows are excluded; column
    // 0 and row boundaries start at -infinity.
    std::vector<score_t> prev(n + 1), cur(n + 1);
    prev[0] = kNegInf;
    for (std::size_t j = 1; j <= n; ++j) prev[j] = std::max(prev[j - 1], score_t{0}) + g;

    for (std::size_t i = 1; i <= m; ++i) {
        const auto p = static_cast<std::uint8_t>(pattern[i - 1]);
        const score_t lead_del_before = static_cast<score_t>(i - 1) * g;
        const score_t lead_del_here = static_cast<score_t>(i) * g;
        cur[0] = kNegInf;
        for (std::size_t j = 1; j <= n; ++j) {
            const auto s = static_cast<std::uint8_t>(input[j - 1]);
            const score_t diag = std::max(prev[j - 1], lead_del_before) +
                                 substitution(p, s, model);
            const score_t ins = std::max(cur[j - 1], lead_del_here) + g;
            const score_t del = prev[j] + g;
            cur[j] = std::max({diag, ins, del});
        }
        std::swap(prev, cur);
    }
    score_t best = kNegInf;
    for (std::size_t j = 1; j <= n; ++j) best = std::max(best, prev[j]);
    return best;
}

}  // namespace snfa
