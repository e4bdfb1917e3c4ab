#include <doctest.h>

#include <string>

#include <json.hpp>

#include "snfa/automaton_io.hpp"
#include "support.hpp"

using snfa_test::CommandResult;
using snfa_test::TempDir;

namespace {

struct CliFixture {
    TempDir dir;
    std::string cli;

    CliFixture() {
        const char* path = snfa_test::cli_path();
        REQUIRE_MESSAGE(path != nullptr,
                        "SNFA_CLI must point at the command-line binary");
        cli = path;
        snfa_test::write_file(dir.file("patterns.fa"), ">agc\nAGC\n");
        snfa_test::write_file(dir.file("inputs.fa"), ">hit\nAGC\n>drift\nAGATG\n");
    }

    CommandResult run(const std::string& args) const {
        return snfa_test::run_command(cli + " " + args + " 2>/dev/null");
    }
    CommandResult run_with_stderr(const std::string& args) const {
        return snfa_test::run_command(cli + " " + args + " 2>&1");
    }
};

}  // namespace

TEST_CASE("compile emits a parseable automaton file") {
    CliFixture f;
    const auto r = f.run("compile --patterns " + f.dir.file("patterns.fa"));
    CHECK(r.exit_code == 0);
    const snfa::AutomatonFile file = snfa::parse_automata(r.output);
    REQUIRE(file.automata.size() == 1);
    CHECK(file.automata[0].pattern == "AGC");
    CHECK(file.automata[0].name == "agc");
}

TEST_CASE("compiled automata can be executed from the file") {
    CliFixture f;
    const std::string automata = f.dir.file("automata.json");
    CHECK(f.run("compile --patterns " + f.dir.file("patterns.fa") + " -o " + automata)
              .exit_code == 0);
    const auto direct = f.run("run --patterns " + f.dir.file("patterns.fa") +
                              " --inputs " + f.dir.file("inputs.fa") + " --mode global");
    const auto loaded = f.run("run --automata " + automata + " --inputs " +
                              f.dir.file("inputs.fa") + " --mode global");
    CHECK(direct.exit_code == 0);
    CHECK(loaded.exit_code == 0);
    CHECK(direct.output == loaded.output);
}

TEST_CASE("run writes the documented TSV shape") {
    CliFixture f;
    const auto r = f.run("run --patterns " + f.dir.file("patterns.fa") + " --inputs " +
                         f.dir.file("inputs.fa") + " --mode global");
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("pattern_id\tste_id\trole\tinput_offset\tscore\n", 0) == 0);
    // The full-match report: state M3 fires at offset 2 with score 6.
    CHECK(r.output.find("0\t7\tM3\t2\t6\n") != std::string::npos);
}

TEST_CASE("run emits one header with groups in input order") {
    CliFixture f;
    const auto r = f.run("run --patterns " + f.dir.file("patterns.fa") + " --inputs " +
                         f.dir.file("inputs.fa") + " --threads 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("pattern_id") == 0);
    CHECK(r.output.find("pattern_id", 1) == std::string::npos);
}

TEST_CASE("identical run invocations produce identical bytes") {
    CliFixture f;
    const std::string base = "run --patterns " + f.dir.file("patterns.fa") + " --inputs " +
                             f.dir.file("inputs.fa");
    const auto a = f.run(base);
    const auto b = f.run(base);
    const auto c = f.run(base + " --threads 2");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output == c.output);
}

TEST_CASE("jsonl output parses line by line") {
    CliFixture f;
    const auto r = f.run("run --patterns " + f.dir.file("patterns.fa") + " --inputs " +
                         f.dir.file("inputs.fa") + " --format jsonl");
    CHECK(r.exit_code == 0);
    std::size_t lines = 0;
    std::size_t pos = 0;
    while (pos < r.output.size()) {
        const std::size_t eol = r.output.find('\n', pos);
        REQUIRE(eol != std::string::npos);
        const auto obj = nlohmann::json::parse(r.output.substr(pos, eol - pos));
        CHECK(obj.contains("ste_id"));
        CHECK(obj.contains("role"));
        pos = eol + 1;
        ++lines;
    }
    CHECK(lines > 0);
}

TEST_CASE("compare passes on the worked example in both modes") {
    CliFixture f;
    const std::string base = "compare --patterns " + f.dir.file("patterns.fa") +
                             " --inputs " + f.dir.file("inputs.fa");
    CHECK(f.run(base + " --mode global").exit_code == 0);
    CHECK(f.run(base + " --mode streaming").exit_code == 0);
}

TEST_CASE("compare fails loudly when the band breaks equivalence") {
    CliFixture f;
    snfa_test::write_file(f.dir.file("ac.fa"), ">s\nAC\n");
    const auto r = f.run_with_stderr("compare --patterns " + f.dir.file("patterns.fa") +
                                     " --inputs " + f.dir.file("ac.fa") +
                                     " --mode global --dmax 0");
    CHECK(r.exit_code == 3);
    CHECK(r.output.find("mismatch") != std::string::npos);
}

TEST_CASE("stats reports placement shape") {
    CliFixture f;
    const auto r = f.run("stats --patterns " + f.dir.file("patterns.fa"));
    CHECK(r.exit_code == 0);
    const auto obj = nlohmann::json::parse(r.output);
    CHECK(obj.at("automata") == 1);
    CHECK(obj.at("states_used") == 10);
    CHECK(obj.at("array_size") == 8192);
    CHECK(obj.at("total_wires") == 41);
    CHECK(obj.at("max_fanout_observed") == 7);
    CHECK(obj.at("fanout_histogram").at("7") == 2);
}

TEST_CASE("bench reports throughput and occupancy") {
    CliFixture f;
    const auto r = f.run("bench --patterns " + f.dir.file("patterns.fa") + " --inputs " +
                         f.dir.file("inputs.fa"));
    CHECK(r.exit_code == 0);
    const auto obj = nlohmann::json::parse(r.output);
    CHECK(obj.at("symbols_processed") == 8);
    CHECK(obj.at("cycles") == 8);
    CHECK(obj.at("symbols_per_second").get<double>() > 0.0);
    CHECK(obj.at("states_used") == 10);
    CHECK(obj.at("array_size") == 8192);
}

TEST_CASE("usage errors exit 1") {
    CliFixture f;
    CHECK(f.run("run --bogus-flag x").exit_code == 1);
    CHECK(f.run("run --patterns " + f.dir.file("patterns.fa")).exit_code == 1);
    CHECK(f.run("frobnicate").exit_code == 1);
    CHECK(f.run("").exit_code == 1);
    CHECK(f.run("run --patterns p.fa --inputs i.fa --mode sideways").exit_code == 1);
    CHECK(f.run("run --patterns p.fa --inputs i.fa --dmax abc").exit_code == 1);
    CHECK(f.run("--help").exit_code == 0);
}

TEST_CASE("validation failures exit 2") {
    CliFixture f;
    snfa_test::write_file(f.dir.file("empty_pattern.fa"), ">p\n\n");
    snfa_test::write_file(f.dir.file("blank.fa"), "\n");

    CHECK(f.run("compile --patterns " + f.dir.file("empty_pattern.fa")).exit_code == 2);
    CHECK(f.run("compile --patterns " + f.dir.file("blank.fa")).exit_code == 2);
    CHECK(f.run("compile --patterns " + f.dir.file("missing.fa")).exit_code == 2);
    CHECK(f.run("compile --patterns " + f.dir.file("patterns.fa") + " --gap 1").exit_code == 2);
    CHECK(f.run("run --patterns " + f.dir.file("patterns.fa") + " --inputs " +
                f.dir.file("inputs.fa") + " --array-size 100")
              .exit_code == 2);
    CHECK(f.run("run --patterns " + f.dir.file("patterns.fa") + " --inputs " +
                f.dir.file("inputs.fa") + " --score-width 7")
              .exit_code == 2);
    CHECK(f.run("run --patterns " + f.dir.file("patterns.fa") + " --inputs " +
                f.dir.file("inputs.fa") + " --max-fanout 4")
              .exit_code == 2);
}
