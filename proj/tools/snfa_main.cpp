// snfa: compile scored pattern automata, execute them over sequences, and
// check them against the alignment oracles.
//
// Exit codes: 0 success, 1 usage error, 2 validation or constraint failure,
// 3 compare mismatch.

#include <atomic>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "snfa/automaton_io.hpp"
#include "snfa/compiler.hpp"
#include "snfa/dp.hpp"
#include "snfa/engine.hpp"
#include "snfa/errors.hpp"
#include "snfa/fasta.hpp"
#include "snfa/overlay.hpp"
#include "snfa/report_io.hpp"
#include "snfa/run_mode.hpp"

namespace {

using nlohmann::ordered_json;

struct Options {
    std::string patterns_path;
    std::string automata_path;
    std::string inputs_path;
    std::string output_path;

    snfa::score_t match = 2;
    snfa::score_t mismatch = -1;
    snfa::score_t gap = -2;

    std::string mode_name = "streaming";
    std::string dmax_text = "full";
    bool no_mismatch_states = false;

    std::uint32_t array_size = 8192;
    std::uint32_t max_fanout = 64;
    std::uint64_t max_wires = 1'000'000;
    int score_width = 16;

    std::string format_name = "tsv";
    unsigned threads = 0;
};

snfa::RunMode parse_mode(const std::string& name) {
    return name == "global" ? snfa::RunMode::Global : snfa::RunMode::Streaming;
}

snfa::ReportFormat parse_format(const std::string& name) {
    return name == "jsonl" ? snfa::ReportFormat::Jsonl : snfa::ReportFormat::Tsv;
}

snfa::CompileOptions compile_options(const Options& opt) {
    snfa::CompileOptions c;
    if (opt.dmax_text != "full") {
        c.d_max = static_cast<std::uint32_t>(std::stoul(opt.dmax_text));
    }
    c.allow_mismatch = !opt.no_mismatch_states;
    return c;
}

snfa::ScoreModel score_model(const Options& opt) {
    snfa::ScoreModel m{opt.match, opt.mismatch, opt.gap};
    m.validate();
    return m;
}

snfa::OverlayConfig overlay_config(const Options& opt) {
    snfa::OverlayConfig c;
    c.array_size = opt.array_size;
    c.max_fanout = opt.max_fanout;
    c.max_global_wires = opt.max_wires;
    c.score_width = snfa::ScoreWidth(opt.score_width);
    return c;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw snfa::Error("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

void write_output(const Options& opt, const std::string& content) {
    if (opt.output_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(opt.output_path, std::ios::binary);
    if (!out) {
        throw snfa::Error("cannot open " + opt.output_path + " for writing");
    }
    out << content;
}

/// Patterns from either --automata (precompiled) or --patterns (compiled
/// here with the model and band flags).
snfa::AutomatonFile load_automata(const Options& opt) {
    if (!opt.automata_path.empty()) {
        return snfa::parse_automata(read_file(opt.automata_path));
    }
    snfa::AutomatonFile file;
    file.model = score_model(opt);
    file.options = compile_options(opt);
    const auto records = snfa::parse_fasta(read_file(opt.patterns_path));
    file.automata.reserve(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        file.automata.push_back(snfa::compile_pattern(static_cast<std::uint32_t>(i),
                                                      records[i].name, records[i].data,
                                                      file.model, file.options));
    }
    return file;
}

int cmd_compile(const Options& opt) {
    write_output(opt, snfa::serialize_automata(load_automata(opt)));
    return 0;
}

int cmd_run(const Options& opt) {
    const snfa::AutomatonFile file = load_automata(opt);
    const snfa::Placement placement = snfa::place(file.automata, overlay_config(opt));
    const snfa::RunMode mode = parse_mode(opt.mode_name);
    const snfa::ReportFormat format = parse_format(opt.format_name);
    const auto sequences = snfa::parse_fasta(read_file(opt.inputs_path));

    std::vector<std::string> groups(sequences.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        snfa::Engine engine(placement, mode);
        for (std::size_t i = next.fetch_add(1); i < sequences.size(); i = next.fetch_add(1)) {
            engine.reset();
            std::ostringstream buf;
            snfa::ReportWriter write_row(buf, format, false);
            for (char c : sequences[i].data) {
                engine.step(static_cast<std::uint8_t>(static_cast<unsigned char>(c)), write_row);
            }
            groups[i] = std::move(buf).str();
        }
    };

    unsigned want = opt.threads != 0 ? opt.threads : std::thread::hardware_concurrency();
    if (want == 0) want = 1;
    const auto nthreads = static_cast<unsigned>(
        std::min<std::size_t>(want, std::max<std::size_t>(sequences.size(), 1)));
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    std::string out;
    if (format == snfa::ReportFormat::Tsv) {
        out = std::string(snfa::ReportWriter::tsv_header()) + "\n";
    }
    for (const std::string& g : groups) out += g;
    write_output(opt, out);
    return 0;
}

int cmd_compare(const Options& opt) {
    const snfa::AutomatonFile file = load_automata(opt);
    const snfa::Placement placement = snfa::place(file.automata, overlay_config(opt));
    const snfa::RunMode mode = parse_mode(opt.mode_name);
    const auto sequences = snfa::parse_fasta(read_file(opt.inputs_path));

    std::uint64_t pairs = 0;
    std::uint64_t mismatches = 0;
    for (const snfa::SequenceRecord& seq : sequences) {
        const auto reports = snfa::run(placement, seq.data, mode);
        for (const snfa::ScoredNfa& nfa : file.automata) {
            ++pairs;
            if (mode == snfa::RunMode::Global) {
                const snfa::score_t engine_best =
                    snfa::best_global(reports, seq.data.size(), nfa);
                const snfa::score_t oracle = snfa::nw_global(nfa.pattern, seq.data, nfa.model);
                if (engine_best != oracle) {
                    ++mismatches;
                    std::cerr << "mismatch: pattern=" << nfa.name << " input=" << seq.name
                              << " mode=global engine=" << engine_best << " dp=" << oracle
                              << "\n";
                }
            } else {
                if (seq.data.empty()) continue;
                const auto engine_best = snfa::best_streaming(reports, nfa);
                const snfa::score_t oracle = snfa::glocal(nfa.pattern, seq.data, nfa.model);
                if (!engine_best || *engine_best != oracle) {
                    ++mismatches;
                    std::cerr << "mismatch: pattern=" << nfa.name << " input=" << seq.name
                              << " mode=streaming engine="
                              << (engine_best ? std::to_string(*engine_best) : "none")
                              << " dp=" << oracle << "\n";
                }
            }
        }
    }

    std::ostringstream summary;
    summary << "compared " << pairs << " pattern/input pairs, " << mismatches
            << " mismatches\n";
    write_output(opt, summary.str());
    return mismatches == 0 ? 0 : 3;
}

int cmd_bench(const Options& opt) {
    const snfa::AutomatonFile file = load_automata(opt);
    const snfa::Placement placement = snfa::place(file.automata, overlay_config(opt));
    const snfa::RunMode mode = parse_mode(opt.mode_name);
    const auto sequences = snfa::parse_fasta(read_file(opt.inputs_path));

    snfa::BenchStats total;
    for (const snfa::SequenceRecord& seq : sequences) {
        const snfa::BenchStats s = snfa::throughput_bench(placement, seq.data, mode);
        total.symbols_processed += s.symbols_processed;
        total.elapsed_seconds += s.elapsed_seconds;
        total.cycles += s.cycles;
        total.reports_emitted += s.reports_emitted;
    }
    total.symbols_per_second =
        total.elapsed_seconds > 0.0
            ? static_cast<double>(total.symbols_processed) / total.elapsed_seconds
            : 0.0;

    const snfa::PlacementStats& stats = snfa::utilization_report(placement);
    ordered_json out{
        {"symbols_processed", total.symbols_processed},
        {"elapsed_seconds", total.elapsed_seconds},
        {"symbols_per_second", total.symbols_per_second},
        {"cycles", total.cycles},
        {"reports_emitted", total.reports_emitted},
        {"states_used", stats.states_used},
        {"array_size", stats.array_size},
        {"utilization", stats.utilization},
    };
    write_output(opt, out.dump(2) + "\n");
    return 0;
}

int cmd_stats(const Options& opt) {
    const snfa::AutomatonFile file = load_automata(opt);
    const snfa::Placement placement = snfa::place(file.automata, overlay_config(opt));
    const snfa::PlacementStats& stats = snfa::utilization_report(placement);

    ordered_json histogram = ordered_json::object();
    for (const auto& [fanout, count] : stats.fanout_histogram) {
        histogram[std::to_string(fanout)] = count;
    }
    ordered_json out{
        {"automata", placement.automata.size()},
        {"states_used", stats.states_used},
        {"array_size", stats.array_size},
        {"utilization", stats.utilization},
        {"total_wires", stats.total_wires},
        {"max_fanout_observed", stats.max_fanout_observed},
        {"fanout_histogram", std::move(histogram)},
    };
    write_output(opt, out.dump(2) + "\n");
    return 0;
}

const CLI::Validator kDmaxValue(
    [](std::string& value) -> std::string {
        if (value == "full") return {};
        if (value.empty()) return "must be a non-negative integer or 'full'";
        for (char c : value) {
            if (c < '0' || c > '9') return "must be a non-negative integer or 'full'";
        }
        return {};
    },
    "N|full");

void add_model_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--match", opt.match, "Match bonus");
    cmd->add_option("--mismatch", opt.mismatch, "Mismatch penalty");
    cmd->add_option("--gap", opt.gap, "Gap penalty per inserted or deleted symbol");
    cmd->add_option("--dmax", opt.dmax_text,
                    "Deletion band: widest skip one edge may take, or 'full'")
        ->check(kDmaxValue);
    cmd->add_flag("--no-mismatch-states", opt.no_mismatch_states,
                  "Compile without substitution states");
}

void add_overlay_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--array-size", opt.array_size, "State slots in the array");
    cmd->add_option("--max-fanout", opt.max_fanout, "Largest out-degree a source may drive");
    cmd->add_option("--max-wires", opt.max_wires, "Global wire budget");
    cmd->add_option("--score-width", opt.score_width, "Score register width in bits");
}

void add_mode_flag(CLI::App* cmd, Options& opt) {
    cmd->add_option("--mode", opt.mode_name, "Execution mode")
        ->check(CLI::IsMember({"global", "streaming"}));
}

CLI::Option* add_patterns_flag(CLI::App* cmd, Options& opt) {
    return cmd->add_option("--patterns", opt.patterns_path, "FASTA file of patterns");
}

void add_source_flags(CLI::App* cmd, Options& opt) {
    auto* patterns = add_patterns_flag(cmd, opt);
    auto* automata = cmd->add_option("--automata", opt.automata_path,
                                     "Compiled automaton file (alternative to --patterns)");
    patterns->excludes(automata);
    add_model_flags(cmd, opt);
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"Scored-automata pattern matching over byte sequences"};
    app.require_subcommand(1);

    CLI::App* compile = app.add_subcommand("compile", "Compile patterns to an automaton file");
    add_patterns_flag(compile, opt)->required();
    add_model_flags(compile, opt);
    compile->add_option("-o,--output", opt.output_path, "Output path (default stdout)");

    CLI::App* run_cmd = app.add_subcommand("run", "Execute patterns over input sequences");
    add_source_flags(run_cmd, opt);
    run_cmd->add_option("--inputs", opt.inputs_path, "FASTA file of input sequences")->required();
    add_mode_flag(run_cmd, opt);
    add_overlay_flags(run_cmd, opt);
    run_cmd->add_option("--format", opt.format_name, "Report format")
        ->check(CLI::IsMember({"tsv", "jsonl"}));
    run_cmd->add_option("--threads", opt.threads, "Worker threads (0 = hardware)");
    run_cmd->add_option("-o,--output", opt.output_path, "Output path (default stdout)");

    CLI::App* compare = app.add_subcommand("compare", "Check the engine against the DP oracle");
    add_source_flags(compare, opt);
    compare->add_option("--inputs", opt.inputs_path, "FASTA file of input sequences")->required();
    add_mode_flag(compare, opt);
    add_overlay_flags(compare, opt);
    compare->add_option("-o,--output", opt.output_path, "Output path (default stdout)");

    CLI::App* bench = app.add_subcommand("bench", "Measure engine throughput");
    add_source_flags(bench, opt);
    bench->add_option("--inputs", opt.inputs_path, "FASTA file of input sequences")->required();
    add_mode_flag(bench, opt);
    add_overlay_flags(bench, opt);
    bench->add_option("-o,--output", opt.output_path, "Output path (default stdout)");

    CLI::App* stats = app.add_subcommand("stats", "Report placement utilization");
    add_source_flags(stats, opt);
    add_overlay_flags(stats, opt);
    stats->add_option("-o,--output", opt.output_path, "Output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(compile)) return cmd_compile(opt);
        if (app.got_subcommand(run_cmd)) return cmd_run(opt);
        if (app.got_subcommand(compare)) return cmd_compare(opt);
        if (app.got_subcommand(bench)) return cmd_bench(opt);
        return cmd_stats(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
