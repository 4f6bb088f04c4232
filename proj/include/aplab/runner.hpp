#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "aplab/report.hpp"

namespace aplab {

struct scan_options {
    u64 jobs = 1;
    u64 chunk_size = 256;
    std::optional<u64> stop_after; // stop once this many keys completed in this invocation
    std::optional<std::string> checkpoint_path;
    std::string task;
    std::string param_hash;
    report_format fmt = report_format::csv;
};

struct scan_outcome {
    bool stopped = false; // stop_after fired before the range was done
    u64 cursor = 0;       // last fully completed key
    u64 findings = 0;     // violation/counterexample records
    u64 undecided = 0;
    std::vector<std::string> lines; // serialized records, ascending key order
};

// Partitions [from, to] into contiguous chunks, evaluates them on `jobs`
// workers, and merges results strictly in chunk order, so the line stream is
// byte-identical for any worker count. When a checkpoint path is set, state
// is saved atomically after every merged chunk and a pre-existing checkpoint
// (matching task + parameter hash) is resumed; the checkpoint is removed on
// completion. eval must be pure and thread-safe.
scan_outcome run_scan(u64 from, u64 to,
                      const std::function<std::vector<report_record>(u64)>& eval,
                      const scan_options& opt);

} // namespace aplab
