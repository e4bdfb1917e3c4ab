#ifndef SNFA_SCORE_HPP
#define SNFA_SCORE_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>

#include "snfa/errors.hpp"

namespace snfa {

using score_t = std::int64_t;

/// Signed saturating score representation of a fixed bit width.
///
/// Arithmetic on scores clamps at the representable bounds; it never wraps.
class ScoreWidth {
public:
    static constexpr int kMinBits = 8;
    static constexpr int kMaxBits = 64;

    constexpr explicit ScoreWidth(int bits) : bits_(bits) {
        if (bits < kMinBits || bits > kMaxBits) {
            throw std::invalid_argument("score width must be between 8 and 64 bits");
        }
    }

    constexpr int bits() const { return bits_; }

    constexpr score_t min() const {
        return bits_ == 64 ? std::numeric_limits<score_t>::min()
                           : -(score_t{1} << (bits_ - 1));
    }
    constexpr score_t max() const {
        return bits_ == 64 ? std::numeric_limits<score_t>::max()
                           : (score_t{1} << (bits_ - 1)) - 1;
    }

    constexpr score_t clamp(score_t v) const {
        const score_t lo = min();
        const score_t hi = max();
        return v < lo ? lo : (v > hi ? hi : v);
    }

    bool operator==(const ScoreWidth&) const = default;

private:
    int bits_;
};

/// Saturating addition: a + b clamped to the width's representable range.
constexpr score_t saturating_add(score_t a, score_t b, ScoreWidth width) {
    // Widen so the raw sum is exact even at 64-bit operands.
    __int128 sum = static_cast<__int128>(a) + static_cast<__int128>(b);
    if (sum < static_cast<__int128>(width.min())) return width.min();
    if (sum > static_cast<__int128>(width.max())) return width.max();
    return static_cast<score_t>(sum);
}

/// The additive scoring triple: bonus for a match, penalties for a
/// substitution and for each gap symbol (insertion or deletion).
struct ScoreModel {
    score_t match_bonus = 2;
    score_t mismatch_penalty = -1;
    score_t gap_penalty = -2;

    /// Throws ModelError unless gap <= 0 and mismatch <= match.
    void validate() const {
        if (gap_penalty > 0) {
            throw ModelError("gap penalty must be <= 0");
        }
        if (mismatch_penalty > match_bonus) {
            throw ModelError("mismatch penalty must not exceed match bonus");
        }
    }

    bool operator==(const ScoreModel&) const = default;
};

}  // namespace snfa

#endif  // SNFA_SCORE_HPP
