#include "snfa/fasta.hpp"

#include "snfa/errors.hpp"

namespace snfa {

namespace {

bool is_space_byte(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

char raise_byte(char c) {
    return (c >= 'a' && c <= 'z') ? static_cast<char>(c - ('a' - 'A')) : c;
}

}  // namespace

std::vector<SequenceRecord> parse_fasta(std::string_view text) {
    std::vector<SequenceRecord> records;
    bool in_record = false;

    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;

        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        if (!line.empty() && line.front() == '>') {
            records.push_back({std::string(line.substr(1)), {}});
            in_record = true;
            continue;
        }
        for (char c : line) {
            if (is_space_byte(c)) continue;
            if (!in_record) {
                throw FastaError(FastaError::Kind::Malformed,
                                 "sequence data before any '>' header");
            }
            records.back().data.push_back(raise_byte(c));
        }
    }

    if (records.empty()) {
        throw FastaError(FastaError::Kind::EmptyFile, "no FASTA records found");
    }
    return records;
}

std::string write_fasta(const std::vector<SequenceRecord>& records) {
    std::string out;
    for (const SequenceRecord& r : records) {
        out += '>';
        out += r.name;
        out += '\n';
        out += r.data;
        out += '\n';
    }
    return out;
}

}  // namespace snfa
