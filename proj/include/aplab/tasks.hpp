#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "aplab/report.hpp"

namespace aplab {

// Exit statuses of run_task.
inline constexpr int kExitOk = 0;          // completed, no findings
inline constexpr int kExitFinding = 1;     // completed with >= 1 violation/counterexample
inline constexpr int kExitUsage = 2;       // bad config / validation / checkpoint refusal
inline constexpr int kExitInternal = 3;    // internal error or arithmetic overflow
inline constexpr int kExitStopped = 4;     // stopped early at user request (--stop-after)

struct task_config {
    std::string task;

    std::optional<u64> from, to;
    std::optional<u64> k, l, d, a;
    std::optional<u64> m, n, p, w;
    std::optional<u64> target, count, bound;
    std::optional<u64> k_exp, width, witness_for;
    std::optional<double> alpha, epsilon;
    std::optional<std::string> mode;  // first | all
    std::optional<std::string> forms; // "a,b;a,b;..."

    report_format format = report_format::csv;
    std::optional<std::string> out;
    std::optional<std::string> checkpoint_path;
    u64 jobs = 1;
    std::optional<u64> stop_after;
    std::optional<u64> sieve_limit;
};

// Canonical parameter hash; excludes output path, checkpoint path, worker
// count and stop_after, which may all change legitimately across a resume.
std::string task_param_hash(const task_config& cfg);

const std::vector<std::string>& task_names();

// Validates, dispatches, writes the report (file or `stream`), prints
// summaries to `err`, and returns the exit status.
int run_task(const task_config& cfg, std::ostream& stream, std::ostream& err);

} // namespace aplab
