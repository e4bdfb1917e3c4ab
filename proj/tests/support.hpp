#ifndef SNFA_TESTS_SUPPORT_HPP
#define SNFA_TESTS_SUPPORT_HPP

#include <sys/wait.h>

#include <array>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "snfa/score.hpp"

namespace snfa_test {

inline std::string random_seq(std::mt19937_64& rng, std::size_t len,
                              std::string_view alphabet = "ACGT") {
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::string s;
    s.reserve(len);
    for (std::size_t i = 0; i < len; ++i) s.push_back(alphabet[pick(rng)]);
    return s;
}

inline snfa::ScoreModel random_model(std::mt19937_64& rng) {
    std::uniform_int_distribution<snfa::score_t> match(0, 5);
    std::uniform_int_distribution<snfa::score_t> penalty(-5, 0);
    return snfa::ScoreModel{match(rng), penalty(rng), penalty(rng)};
}

/// Every sequence over `alphabet` of length min_len..max_len, shortest
/// first, lexicographic within a length.
inline std::vector<std::string> all_sequences(std::string_view alphabet, std::size_t min_len,
                                              std::size_t max_len) {
    std::vector<std::string> out;
    std::vector<std::string> frontier{""};
    for (std::size_t len = 0; len <= max_len; ++len) {
        if (len >= min_len) {
            for (const std::string& s : frontier) out.push_back(s);
        }
        if (len == max_len) break;
        std::vector<std::string> next;
        next.reserve(frontier.size() * alphabet.size());
        for (const std::string& s : frontier) {
            for (char c : alphabet) next.push_back(s + c);
        }
        frontier = std::move(next);
    }
    return out;
}

class TempDir {
public:
    TempDir() {
        std::string tmpl = (std::filesystem::temp_directory_path() / "snfa_test_XXXXXX").string();
        if (!mkdtemp(tmpl.data())) {
            throw std::runtime_error("mkdtemp failed");
        }
        path_ = tmpl;
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    std::string file(std::string_view name) const { return (path_ / name).string(); }

private:
    std::filesystem::path path_;
};

inline void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read failed: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

/// Runs through the shell, capturing stdout; stderr passes through.
inline CommandResult run_command(const std::string& command) {
    CommandResult result;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed: " + command);
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        result.output.append(buf.data(), n);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

/// Path of the CLI binary under test, injected by the build.
inline const char* cli_path() { return std::getenv("SNFA_CLI"); }

}  // namespace snfa_test

#endif  // SNFA_TESTS_SUPPORT_HPP
