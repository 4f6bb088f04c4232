#include "aplab/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace aplab {

report_format parse_report_format(const std::string& s) {
    if (s == "csv") return report_format::csv;
    if (s == "jsonl") return report_format::jsonl;
    throw validation_error("unknown report format '" + s + "' (expected csv or jsonl)");
}

namespace {

std::string format_double(double d) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", d);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
    return out;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string format_value(const field_value& v, report_format fmt) {
    struct visitor {
        report_format fmt;
        std::string operator()(u64 x) const { return std::to_string(x); }
        std::string operator()(i64 x) const { return std::to_string(x); }
        std::string operator()(double x) const { return format_double(x); }
        std::string operator()(bool x) const { return x ? "true" : "false"; }
        std::string operator()(const std::string& x) const {
            return fmt == report_format::csv ? csv_escape(x) : json_escape(x);
        }
    };
    return std::visit(visitor{fmt}, v);
}

std::string serialize_record(const report_record& rec, report_format fmt) {
    std::string out;
    if (fmt == report_format::csv) {
        for (std::size_t i = 0; i < rec.fields.size(); ++i) {
            if (i) out += ',';
            out += format_value(rec.fields[i].second, fmt);
        }
    } else {
        out += '{';
        for (std::size_t i = 0; i < rec.fields.size(); ++i) {
            if (i) out += ',';
            out += json_escape(rec.fields[i].first);
            out += ':';
            out += format_value(rec.fields[i].second, fmt);
        }
        out += '}';
    }
    return out;
}

std::string csv_header(const std::vector<std::string>& columns) {
    std::string out;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) out += ',';
        out += columns[i];
    }
    return out;
}

void write_report_file(const std::string& path, const std::string& header,
                       const std::vector<std::string>& lines) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw error("cannot open " + tmp.string() + " for writing");
        if (!header.empty()) f << header << '\n';
        for (const auto& line : lines) f << line << '\n';
        f.flush();
        if (!f) throw error("write failed for " + tmp.string());
    }
    fs::rename(tmp, target);
}

void emit_report(const std::vector<report_record>& records, report_format fmt,
                 const std::vector<std::string>& columns, const std::string& path) {
    for (std::size_t i = 1; i < records.size(); ++i)
        if (records[i - 1].key > records[i].key)
            throw validation_error("emit_report: records must be sorted by key");
    std::vector<std::string> lines;
    lines.reserve(records.size());
    for (const auto& r : records) lines.push_back(serialize_record(r, fmt));
    std::string header = fmt == report_format::csv ? csv_header(columns) : std::string{};
    write_report_file(path, header, lines);
}

} // namespace aplab
