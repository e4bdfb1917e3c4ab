#ifndef SNFA_FASTA_HPP
#define SNFA_FASTA_HPP

#include <string>
#include <string_view>
#include <vector>

namespace snfa {

/// One FASTA record. `data` holds the concatenated sequence lines with
/// all whitespace removed and a-z raised to A-Z; every other byte is kept
/// verbatim.
struct SequenceRecord {
    std::string name;
    std::string data;

    bool operator==(const SequenceRecord&) const = default;
};

/// Splits on lines beginning '>'. Throws FastaError: Malformed when
/// sequence data precedes any header, EmptyFile when no record is found.
std::vector<SequenceRecord> parse_fasta(std::string_view text);

/// One header plus one sequence line per record; parse(write(r)) == r.
std::string write_fasta(const std::vector<SequenceRecord>& records);

}  // namespace snfa

#endif  // SNFA_FASTA_HPP
