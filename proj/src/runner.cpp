#include "aplab/runner.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <exception>
#include <filesystem>
#include <mutex>
#include <thread>

#include "aplab/checkpoint.hpp"

namespace aplab {

namespace {

bool is_finding(const report_record& rec) {
    for (const auto& [name, value] : rec.fields) {
        if (name == "verdict") {
            if (const auto* s = std::get_if<std::string>(&value))
                return *s == "violation" || *s == "counterexample";
        }
    }
    return false;
}

bool is_undecided(const report_record& rec) {
    for (const auto& [name, value] : rec.fields) {
        if (name == "verdict") {
            if (const auto* s = std::get_if<std::string>(&value)) return *s == "undecided";
        }
    }
    return false;
}

} // namespace

scan_outcome run_scan(u64 from, u64 to,
                      const std::function<std::vector<report_record>(u64)>& eval,
                      const scan_options& opt) {
    if (from > to) throw validation_error("run_scan: from <= to required");
    if (opt.stop_after && !opt.checkpoint_path)
        throw validation_error("run_scan: --stop-after requires --checkpoint (a stop would lose work)");

    scan_outcome out;
    u64 start = from;
    if (opt.checkpoint_path && std::filesystem::exists(*opt.checkpoint_path)) {
        checkpoint cp = checkpoint_load(*opt.checkpoint_path);
        if (cp.task != opt.task)
            throw checkpoint_error("checkpoint belongs to task '" + cp.task + "', not '" +
                                   opt.task + "'");
        if (cp.param_hash != opt.param_hash)
            throw checkpoint_error("checkpoint parameter hash mismatch (refusing to resume)");
        if (cp.cursor < from || cp.cursor > to)
            throw checkpoint_error("checkpoint cursor outside the scan range");
        out.cursor = cp.cursor;
        out.findings = cp.findings;
        out.undecided = cp.undecided;
        out.lines = std::move(cp.lines);
        if (cp.cursor >= to) { // already complete; just re-emit
            std::filesystem::remove(*opt.checkpoint_path);
            return out;
        }
        start = cp.cursor + 1;
    }

    u64 chunk = std::max<u64>(opt.chunk_size, 1);
    u64 nkeys = to - start + 1;
    u64 nchunks = (nkeys + chunk - 1) / chunk;
    u64 jobs = std::clamp<u64>(opt.jobs, 1, 64);

    std::vector<std::optional<std::vector<report_record>>> results(nchunks);
    std::mutex mu;
    std::condition_variable cv;
    std::atomic<u64> next_chunk{0};
    std::atomic<bool> halt{false};
    std::exception_ptr worker_error;

    auto chunk_lo = [&](u64 c) { return start + c * chunk; };
    auto chunk_hi = [&](u64 c) { return std::min(to, start + c * chunk + (chunk - 1)); };

    auto work = [&]() {
        for (;;) {
            if (halt.load(std::memory_order_relaxed)) return;
            u64 c = next_chunk.fetch_add(1);
            if (c >= nchunks) return;
            std::vector<report_record> recs;
            try {
                for (u64 key = chunk_lo(c); key <= chunk_hi(c); ++key) {
                    auto r = eval(key);
                    recs.insert(recs.end(), std::make_move_iterator(r.begin()),
                                std::make_move_iterator(r.end()));
                }
            } catch (...) {
                std::lock_guard lk(mu);
                if (!worker_error) worker_error = std::current_exception();
                halt.store(true);
                cv.notify_all();
                return;
            }
            std::lock_guard lk(mu);
            results[c] = std::move(recs);
            cv.notify_all();
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (u64 j = 0; j < jobs; ++j) pool.emplace_back(work);

    u64 completed_this_run = 0;
    {
        std::unique_lock lk(mu);
        for (u64 c = 0; c < nchunks; ++c) {
            cv.wait(lk, [&] { return results[c].has_value() || worker_error; });
            if (worker_error) break;
            for (const auto& rec : *results[c]) {
                if (is_finding(rec)) ++out.findings;
                if (is_undecided(rec)) ++out.undecided;
                out.lines.push_back(serialize_record(rec, opt.fmt));
            }
            results[c].reset();
            out.cursor = chunk_hi(c);
            completed_this_run += chunk_hi(c) - chunk_lo(c) + 1;
            if (opt.checkpoint_path) {
                lk.unlock();
                checkpoint cp{kCheckpointSchemaVersion, opt.task,    opt.param_hash,
                              out.cursor,               out.findings, out.undecided,
                              out.lines};
                checkpoint_save(cp, *opt.checkpoint_path);
                lk.lock();
            }
            if (opt.stop_after && completed_this_run >= *opt.stop_after && out.cursor < to) {
                out.stopped = true;
                halt.store(true);
                break;
            }
        }
    }
    for (auto& t : pool) t.join();
    if (worker_error) std::rethrow_exception(worker_error);

    if (out.stopped) return out;
    if (opt.checkpoint_path) std::filesystem::remove(*opt.checkpoint_path);
    return out;
}

} // namespace aplab
