#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "aplab/tasks.hpp"

namespace {

struct flag_holder {
    aplab::task_config cfg;
    std::string format = "csv";
    std::string out, checkpoint, mode, forms;
    std::uint64_t from = 0, to = 0, k = 0, l = 0, d = 0, a = 0, m = 0, n = 0, p = 0, w = 0;
    std::uint64_t target = 0, count = 0, bound = 0, k_exp = 0, width = 0, witness_for = 0;
    std::uint64_t jobs = 1, stop_after = 0, sieve_limit = 0;
    double alpha = 0.0, epsilon = 0.0;
};

// Wires every option once; presence is detected through CLI11 counts so the
// task layer sees only the flags the user actually passed.
void add_common_options(CLI::App* sub, flag_holder& h) {
    sub->add_option("--from", h.from, "range start (task-specific key)");
    sub->add_option("--to", h.to, "range end, inclusive");
    sub->add_option("--k", h.k, "progression modulus k (1 = unconstrained)");
    sub->add_option("--l", h.l, "progression residue l");
    sub->add_option("--d", h.d, "second modulus d");
    sub->add_option("--a", h.a, "residue a mod d");
    sub->add_option("--m", h.m, "integer m");
    sub->add_option("--n", h.n, "integer n");
    sub->add_option("--p", h.p, "odd prime p");
    sub->add_option("--w", h.w, "progression index w (target = 2(k*w+l))");
    sub->add_option("--target", h.target, "even decomposition target");
    sub->add_option("--count", h.count, "number of values to generate");
    sub->add_option("--bound", h.bound, "search/scan bound");
    sub->add_option("--k-exp", h.k_exp, "exponent k in the scanned inequality");
    sub->add_option("--alpha", h.alpha, "exponent alpha (m < n^alpha)");
    sub->add_option("--epsilon", h.epsilon, "epsilon in (0, 0.5)");
    sub->add_option("--mode", h.mode, "first|all (decomposition listing)");
    sub->add_option("--forms", h.forms, "linear system, e.g. \"1,1;2,3\"");
    sub->add_option("--width", h.width, "f1f2 factorial search cap (default 12)");
    sub->add_option("--witness-for", h.witness_for, "report least b < a with a+b prime");
    sub->add_option("--format", h.format, "csv|jsonl (default csv)");
    sub->add_option("--out", h.out, "report path (default stdout)");
    sub->add_option("--checkpoint", h.checkpoint, "checkpoint path (scan tasks)");
    sub->add_option("--jobs", h.jobs, "worker threads (default 1)");
    sub->add_option("--stop-after", h.stop_after, "stop after N keys (needs --checkpoint)");
    sub->add_option("--sieve-limit", h.sieve_limit, "shared prime-table ceiling override");
}

aplab::task_config build_config(CLI::App* sub, flag_holder& h, const std::string& task) {
    aplab::task_config cfg;
    cfg.task = task;
    auto set_u = [&](const char* name, std::uint64_t v, std::optional<aplab::u64>& dst) {
        if (sub->count(name)) dst = v;
    };
    set_u("--from", h.from, cfg.from);
    set_u("--to", h.to, cfg.to);
    set_u("--k", h.k, cfg.k);
    set_u("--l", h.l, cfg.l);
    set_u("--d", h.d, cfg.d);
    set_u("--a", h.a, cfg.a);
    set_u("--m", h.m, cfg.m);
    set_u("--n", h.n, cfg.n);
    set_u("--p", h.p, cfg.p);
    set_u("--w", h.w, cfg.w);
    set_u("--target", h.target, cfg.target);
    set_u("--count", h.count, cfg.count);
    set_u("--bound", h.bound, cfg.bound);
    set_u("--k-exp", h.k_exp, cfg.k_exp);
    set_u("--width", h.width, cfg.width);
    set_u("--witness-for", h.witness_for, cfg.witness_for);
    set_u("--sieve-limit", h.sieve_limit, cfg.sieve_limit);
    set_u("--stop-after", h.stop_after, cfg.stop_after);
    if (sub->count("--alpha")) cfg.alpha = h.alpha;
    if (sub->count("--epsilon")) cfg.epsilon = h.epsilon;
    if (sub->count("--mode")) cfg.mode = h.mode;
    if (sub->count("--forms")) cfg.forms = h.forms;
    if (sub->count("--out")) cfg.out = h.out;
    if (sub->count("--checkpoint")) cfg.checkpoint_path = h.checkpoint;
    cfg.jobs = h.jobs;
    cfg.format = aplab::parse_report_format(h.format);
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"aplab - arithmetic-progression least-prime and Goldbach verification lab"};
    app.require_subcommand(1);

    std::vector<std::pair<CLI::App*, std::unique_ptr<flag_holder>>> subs;
    for (const auto& name : aplab::task_names()) {
        auto* sub = app.add_subcommand(name);
        auto holder = std::make_unique<flag_holder>();
        add_common_options(sub, *holder);
        subs.emplace_back(sub, std::move(holder));
    }

    CLI11_PARSE(app, argc, argv);

    for (auto& [sub, holder] : subs) {
        if (sub->parsed()) {
            aplab::task_config cfg;
            try {
                cfg = build_config(sub, *holder, sub->get_name());
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << '\n';
                return aplab::kExitUsage;
            }
            return aplab::run_task(cfg, std::cout, std::cerr);
        }
    }
    return aplab::kExitUsage;
}
