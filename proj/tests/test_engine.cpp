#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "snfa/compiler.hpp"
#include "snfa/dp.hpp"
#include "snfa/engine.hpp"
#include "snfa/errors.hpp"
#include "snfa/overlay.hpp"
#include "snfa/paths.hpp"
#include "support.hpp"

using namespace snfa;

namespace {

Placement single(const ScoredNfa& nfa, int score_bits = 64) {
    OverlayConfig c;
    c.score_width = ScoreWidth(score_bits);
    return place(std::vector{nfa}, c);
}

void feed(Engine& engine, std::string_view input) {
    for (char c : input) engine.step(static_cast<std::uint8_t>(c));
}

// Slot ids for the mismatch layout.
constexpr std::uint32_t kI0 = 0;
std::uint32_t m_id(std::uint32_t i) { return 3 * (i - 1) + 1; }
std::uint32_t x_id(std::uint32_t i) { return 3 * (i - 1) + 2; }
std::uint32_t i_id(std::uint32_t i) { return 3 * i; }

}  // namespace

TEST_CASE("first cycle activates the armed band") {
    const ScoredNfa nfa = compile_pattern("AGC", ScoreModel{}, {});
    Engine engine(single(nfa), RunMode::Global);

    engine.step('A');
    CHECK(engine.cycle() == 1);
    CHECK(engine.active_states() == 4);
    CHECK(engine.activation(kI0) == -2);
    CHECK(engine.activation(m_id(1)) == 2);
    CHECK(engine.activation(x_id(2)) == -3);
    CHECK(engine.activation(x_id(3)) == -5);
    CHECK_FALSE(engine.activation(m_id(2)).has_value());
    CHECK_FALSE(engine.activation(x_id(1)).has_value());
    CHECK_FALSE(engine.activation(i_id(1)).has_value());

    const std::vector<Report> want{
        {0, kI0, {RoleKind::Insert, 0}, 0, -8},
        {0, m_id(1), {RoleKind::Match, 1}, 0, -2},
        {0, x_id(2), {RoleKind::Mismatch, 2}, 0, -5},
        {0, x_id(3), {RoleKind::Mismatch, 3}, 0, -5},
    };
    CHECK(engine.reports() == want);
}

TEST_CASE("second cycle propagates along scored edges") {
    const ScoredNfa nfa = compile_pattern("AGC", ScoreModel{}, {});
    Engine engine(single(nfa), RunMode::Global);

    feed(engine, "AG");
    CHECK(engine.active_states() == 7);
    CHECK(engine.activation(kI0) == -4);
    CHECK(engine.activation(x_id(1)) == -3);
    CHECK(engine.activation(i_id(1)) == 0);
    CHECK(engine.activation(m_id(2)) == 4);
    CHECK(engine.activation(i_id(2)) == -5);
    CHECK(engine.activation(x_id(3)) == -1);
    CHECK(engine.activation(i_id(3)) == -7);
    CHECK_FALSE(engine.activation(m_id(1)).has_value());
    CHECK_FALSE(engine.activation(x_id(2)).has_value());
    CHECK_FALSE(engine.activation(m_id(3)).has_value());
}

TEST_CASE("streaming re-arms the start source every cycle") {
    const ScoredNfa nfa = compile_pattern("AGC", ScoreModel{}, {});
    Engine engine(single(nfa), RunMode::Streaming);

    feed(engine, "AG");
    // Fresh arms beat stale propagation where they score higher.
    CHECK(engine.activation(x_id(1)) == -1);
    CHECK(engine.activation(kI0) == -2);
    // Propagation wins where it scores higher.
    CHECK(engine.activation(m_id(2)) == 4);
    CHECK(engine.activation(x_id(3)) == -1);
}

TEST_CASE("whole-input best scores for the worked example") {
    const ScoredNfa nfa = compile_pattern("AGC", ScoreModel{}, {});
    const Placement p = single(nfa);

    const auto match_reports = run(p, "AGC", RunMode::Global);
    CHECK(best_global(match_reports, 3, nfa) == 6);
    CHECK(std::find(match_reports.begin(), match_reports.end(),
                    Report{0, m_id(3), {RoleKind::Match, 3}, 2, 6}) != match_reports.end());

    const auto drift_reports = run(p, "AGATG", RunMode::Global);
    CHECK(best_global(drift_reports, 5, nfa) == -1);
}

TEST_CASE("windowed best scores for the worked example") {
    const ScoredNfa nfa = compile_pattern("AGC", ScoreModel{}, {});
    const Placement p = single(nfa);

    CHECK(best_streaming(run(p, "AGATG", RunMode::Streaming), nfa) == 3);
    CHECK(best_streaming(run(p, "AGC", RunMode::Streaming), nfa) == 6);
    CHECK(best_streaming(run(p, "T", RunMode::Streaming), nfa) == -5);
    CHECK_FALSE(best_streaming(run(p, "", RunMode::Streaming), nfa).has_value());
}

TEST_CASE("empty input conventions") {
    const ScoredNfa nfa = compile_pattern("AGC", ScoreModel{}, {});
    CHECK(best_global({}, 0, nfa) == -6);
    CHECK(run(single(nfa), "", RunMode::Global).empty());
}

TEST_CASE("missing final-offset report is an error") {
    Ste lone;
    lone.id = 0;
    lone.symbol_class = SymbolClass::single('A');
    lone.start_edge_score = 0;
    lone.accepting = true;
    ScoredNfa nfa;
    nfa.pattern = "A";
    nfa.states.push_back(lone);

    const auto reports = run(single(nfa), "B", RunMode::Global);
    CHECK(reports.empty());
    CHECK_THROWS_AS(best_global(reports, 1, nfa), Error);
}

TEST_CASE("per-state report scores equal exhaustive path enumeration") {
    std::mt19937_64 rng(105);
    for (int i = 0; i < 60; ++i) {
        const std::string p = snfa_test::random_seq(rng, 1 + rng() % 4);
        const std::string s = snfa_test::random_seq(rng, rng() % 7);
        const ScoreModel m = snfa_test::random_model(rng);
        const ScoredNfa nfa = compile_pattern(p, m, {});
        const Placement placement = single(nfa);
        CAPTURE(p);
        CAPTURE(s);

        for (RunMode mode : {RunMode::Global, RunMode::Streaming}) {
            std::map<std::pair<std::uint32_t, std::uint64_t>, score_t> got;
            for (const Report& r : run(placement, s, mode)) {
                auto [it, inserted] = got.emplace(std::make_pair(r.ste_id, r.input_offset), r.score);
                CHECK(inserted);
            }
            CHECK(got == enumerate_accept_scores(nfa, s, mode));
        }
    }
}

TEST_CASE("a state with no matching class or contribution stays dark") {
    Ste lone;
    lone.id = 0;
    lone.symbol_class = SymbolClass::single('A');
    lone.start_edge_score = 0;
    lone.accepting = true;
    ScoredNfa nfa;
    nfa.pattern = "A";
    nfa.states.push_back(lone);

    Engine engine(single(nfa), RunMode::Streaming);
    feed(engine, "BZB");
    CHECK(engine.active_states() == 0);
    CHECK(engine.reports().empty());

    engine.step('A');
    CHECK(engine.active_states() == 1);
    CHECK(engine.reports().size() == 1);
}

TEST_CASE("non-accepting states emit no reports") {
    Ste silent;
    silent.id = 0;
    silent.symbol_class = SymbolClass::any();
    silent.start_edge_score = 1;
    silent.accepting = false;
    ScoredNfa nfa;
    nfa.pattern = "A";
    nfa.states.push_back(silent);

    Engine engine(single(nfa), RunMode::Streaming);
    feed(engine, "AAA");
    CHECK(engine.active_states() == 1);
    CHECK(engine.reports().empty());
}

TEST_CASE("multiple placed automata report independently and in slot order") {
    const ScoredNfa agc = compile_pattern(0, "agc", "AGC", ScoreModel{}, {});
    const ScoredNfa a = compile_pattern(1, "a", "A", ScoreModel{}, {});
    OverlayConfig c;
    c.score_width = ScoreWidth(64);
    const Placement p = place(std::vector{agc, a}, c);

    const auto reports = run(p, "AGC", RunMode::Global);
    CHECK(best_global(reports, 3, agc) == 6);
    CHECK(best_global(reports, 3, a) == nw_global("A", "AGC", ScoreModel{}));

    for (std::size_t i = 1; i < reports.size(); ++i) {
        const Report& prev = reports[i - 1];
        const Report& cur = reports[i];
        const auto key = [](const Report& r) {
            return std::tuple(r.input_offset, r.pattern_id, r.ste_id);
        };
        CHECK(key(prev) < key(cur));
    }
}

TEST_CASE("runs are deterministic") {
    const ScoredNfa nfa = compile_pattern("AGTC", ScoreModel{}, {});
    const Placement p = single(nfa);
    const auto first = run(p, "AGTCAGTC", RunMode::Streaming);
    const auto second = run(p, "AGTCAGTC", RunMode::Streaming);
    CHECK(first == second);
    CHECK_FALSE(first.empty());
}

TEST_CASE("narrow widths clamp activation and report scores") {
    const ScoredNfa nfa = compile_pattern("A", ScoreModel{}, {});
    const Placement p = single(nfa, 8);

    // One arm at cycle 0, then the insert loop decays by the gap penalty
    // each cycle; 200 cycles would reach -400 unclamped.
    const std::string input(200, 'A');
    const auto reports = run(p, input, RunMode::Global);
    REQUIRE_FALSE(reports.empty());

    score_t lowest = 0;
    score_t highest = reports.front().score;
    for (const Report& r : reports) {
        CHECK(r.score >= -128);
        CHECK(r.score <= 127);
        lowest = std::min(lowest, r.score);
        highest = std::max(highest, r.score);
    }
    CHECK(lowest == -128);
    // The armed match at cycle 0 is the only positive activation; nothing
    // may wrap around past it.
    CHECK(highest == 2);
}

TEST_CASE("reset clears run state and may switch modes") {
    const ScoredNfa nfa = compile_pattern("AGC", ScoreModel{}, {});
    Engine engine(single(nfa), RunMode::Global);

    feed(engine, "AGC");
    const auto first = engine.reports();
    engine.finalize();

    engine.reset();
    CHECK(engine.cycle() == 0);
    CHECK(engine.active_states() == 0);
    CHECK(engine.reports().empty());
    CHECK_FALSE(engine.finalized());
    feed(engine, "AGC");
    CHECK(engine.reports() == first);

    engine.reset(RunMode::Streaming);
    feed(engine, "AG");
    CHECK(engine.activation(x_id(1)) == -1);
}

TEST_CASE("stepping a finalized engine throws") {
    const ScoredNfa nfa = compile_pattern("A", ScoreModel{}, {});
    Engine engine(single(nfa), RunMode::Streaming);
    engine.step('A');
    engine.finalize();
    CHECK(engine.finalized());
    CHECK_THROWS_AS(engine.step('A'), Error);
}

TEST_CASE("throughput measurement reports consistent totals") {
    const ScoredNfa nfa = compile_pattern("AGC", ScoreModel{}, {});
    const Placement p = single(nfa);
    std::string input;
    for (int i = 0; i < 50; ++i) input += "AGATG";

    const BenchStats stats = throughput_bench(p, input, RunMode::Streaming);
    CHECK(stats.symbols_processed == input.size());
    CHECK(stats.cycles == input.size());
    CHECK(stats.reports_emitted == run(p, input, RunMode::Streaming).size());
    CHECK(stats.elapsed_seconds >= 0.0);
    CHECK(stats.symbols_per_second > 0.0);
}

TEST_CASE("an empty placement runs and reports nothing") {
    const Placement p = place(std::vector<ScoredNfa>{}, OverlayConfig{});
    CHECK(run(p, "AGC", RunMode::Streaming).empty());
}
