#include "ggn/records.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "json.hpp"

#include "ggn/classify.hpp"

namespace ggn {

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

}  // namespace

std::string to_string(Method m) {
    switch (m) {
        case Method::Solver: return "solver";
        case Method::Formula: return "formula";
        case Method::Oracle: return "oracle";
    }
    return "?";
}

std::string OutputRecord::outcome() const { return to_string(ggn::outcome(nim)); }

std::string emit(const std::vector<OutputRecord>& records, OutputFormat format) {
    std::ostringstream out;
    switch (format) {
        case OutputFormat::Csv:
            out << "group,order,game,nim,outcome,method,case\n";
            for (const auto& r : records)
                out << csv_field(r.group) << ',' << r.order << ',' << to_string(r.kind) << ',' << r.nim << ','
                    << r.outcome() << ',' << to_string(r.method) << ',' << csv_field(r.case_label.value_or(""))
                    << '\n';
            break;
        case OutputFormat::Json:
            if (records.empty()) {
                out << "[]\n";
                break;
            }
            out << "[\n";
            for (std::size_t i = 0; i < records.size(); ++i) {
                const auto& r = records[i];
                out << "  {\"group\": " << json_string(r.group) << ", \"order\": " << r.order
                    << ", \"kind\": " << json_string(to_string(r.kind)) << ", \"nim\": " << r.nim
                    << ", \"outcome\": " << json_string(r.outcome())
                    << ", \"method\": " << json_string(to_string(r.method))
                    << ", \"case_label\": " << (r.case_label ? json_string(*r.case_label) : "null") << "}"
                    << (i + 1 < records.size() ? "," : "") << '\n';
            }
            out << "]\n";
            break;
        case OutputFormat::Text: {
            std::vector<std::array<std::string, 7>> rows{{"group", "order", "game", "nim", "outcome", "method", "case"}};
            for (const auto& r : records)
                rows.push_back({r.group, r.order, to_string(r.kind), "*" + std::to_string(r.nim), r.outcome(),
                                to_string(r.method), r.case_label.value_or("-")});
            std::array<std::size_t, 7> width{};
            for (const auto& row : rows)
                for (std::size_t c = 0; c < 7; ++c)
                    width[c] = std::max(width[c], row[c].size());
            for (const auto& row : rows) {
                std::string line;
                for (std::size_t c = 0; c < 7; ++c) {
                    line += row[c];
                    if (c + 1 < 7)
                        line += std::string(width[c] - row[c].size() + 2, ' ');
                }
                out << line << '\n';
            }
            break;
        }
    }
    return out.str();
}

std::string export_dot(const GameReport& report, std::size_t group_order) {
    std::ostringstream out;
    out << "digraph " << json_string(to_string(report.kind) + " " + report.group) << " {\n";
    for (std::size_t i = 0; i < report.class_table.size(); ++i) {
        const auto& row = report.class_table[i];
        out << "  c" << i << " [label=\"" << row.subgroup_order << '/' << row.parity << '/'
            << row.type.to_string() << "\"];\n";
    }
    if (report.kind == GameKind::Gen) {
        const TypeTriple top{static_cast<unsigned>(group_order % 2), 0, 0};
        out << "  top [label=\"" << group_order << '/' << top.parity << '/' << top.to_string() << "\"];\n";
    }
    for (std::size_t i = 0; i < report.class_table.size(); ++i) {
        const auto& row = report.class_table[i];
        for (auto j : row.options)
            out << "  c" << i << " -> c" << j << ";\n";
        if (row.has_top_option)
            out << "  c" << i << " -> top;\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace ggn
