#include "snfa/report_io.hpp"

#include <ostream>
#include <sstream>

#include <json.hpp>

namespace snfa {

const char* ReportWriter::tsv_header() { return "pattern_id\tste_id\trole\tinput_offset\tscore"; }

ReportWriter::ReportWriter(std::ostream& out, ReportFormat format, bool with_header)
    : out_(&out), format_(format) {
    if (format_ == ReportFormat::Tsv && with_header) {
        *out_ << tsv_header() << '\n';
    }
}

void ReportWriter::operator()(const Report& r) {
    if (format_ == ReportFormat::Tsv) {
        *out_ << r.pattern_id << '\t' << r.ste_id << '\t' << to_string(r.role) << '\t'
              << r.input_offset << '\t' << r.score << '\n';
    } else {
        nlohmann::ordered_json line{
            {"pattern_id", r.pattern_id},
            {"ste_id", r.ste_id},
            {"role", to_string(r.role)},
            {"input_offset", r.input_offset},
            {"score", r.score},
        };
        *out_ << line.dump() << '\n';
    }
    ++written_;
}

std::string write_reports(std::span<const Report> reports, ReportFormat format) {
    std::ostringstream out;
    ReportWriter writer(out, format);
    for (const Report& r : reports) writer(r);
    return std::move(out).str();
}

}  // namespace snfa
