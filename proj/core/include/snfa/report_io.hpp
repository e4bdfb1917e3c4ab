#ifndef SNFA_REPORT_IO_HPP
#define SNFA_REPORT_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>

#include "snfa/engine.hpp"

namespace snfa {

enum class ReportFormat { Tsv, Jsonl };

/// Streaming report serializer; usable directly as an engine step sink.
/// TSV emits its header row on construction, so an empty stream still
/// yields a well-formed file. Rows appear in call order. Pass
/// with_header = false when the caller writes the header itself and this
/// writer only contributes rows.
class ReportWriter {
public:
    ReportWriter(std::ostream& out, ReportFormat format, bool with_header = true);

    /// The TSV header row, without trailing newline.
    static const char* tsv_header();

    void operator()(const Report& r);

    std::uint64_t written() const { return written_; }

private:
    std::ostream* out_;
    ReportFormat format_;
    std::uint64_t written_ = 0;
};

/// Whole-stream form. TSV columns: pattern_id, ste_id, role, input_offset,
/// score; JSONL mirrors the same fields one object per line.
std::string write_reports(std::span<const Report> reports, ReportFormat format);

}  // namespace snfa

#endif  // SNFA_REPORT_IO_HPP
