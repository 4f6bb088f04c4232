#pragma once

#include <string>
#include <variant>
#include <vector>

#include "aplab/common.hpp"

namespace aplab {

enum class report_format { csv, jsonl };

report_format parse_report_format(const std::string& s); // "csv" | "jsonl"

// Typed cell so both formats print numbers identically: integers in plain
// decimal, floating values with exactly 6 decimal places, no locale.
using field_value = std::variant<u64, i64, double, bool, std::string>;

struct report_record {
    u64 key = 0;
    std::vector<std::pair<std::string, field_value>> fields;

    report_record& add(std::string name, field_value v) {
        fields.emplace_back(std::move(name), std::move(v));
        return *this;
    }
};

std::string format_value(const field_value& v, report_format fmt);

// One line, no trailing newline. CSV order and JSONL key order both follow
// field insertion order.
std::string serialize_record(const report_record& rec, report_format fmt);

std::string csv_header(const std::vector<std::string>& columns);

// Atomic write (temp file + rename). `header` is prepended when nonempty.
void write_report_file(const std::string& path, const std::string& header,
                       const std::vector<std::string>& lines);

// Convenience wrapper matching the harness contract: records must already be
// sorted by key.
void emit_report(const std::vector<report_record>& records, report_format fmt,
                 const std::vector<std::string>& columns, const std::string& path);

} // namespace aplab
