#include "aplab/tasks.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "aplab/checkpoint.hpp"
#include "aplab/goldbach.hpp"
#include "aplab/linear_systems.hpp"
#include "aplab/runner.hpp"

namespace aplab {

namespace {

struct task_result {
    std::vector<std::string> columns;
    std::vector<std::string> lines;
    u64 findings = 0;
    u64 undecided = 0;
    bool stopped = false;
    std::string summary;
};

u64 require(const std::optional<u64>& v, const char* flag) {
    if (!v) throw validation_error(std::string("missing required option ") + flag);
    return *v;
}

double require(const std::optional<double>& v, const char* flag) {
    if (!v) throw validation_error(std::string("missing required option ") + flag);
    return *v;
}

ap_class class_of(const task_config& cfg, bool allow_unconstrained) {
    u64 k = cfg.k.value_or(1);
    u64 l = cfg.l.value_or(0);
    ap_class cls(k, l);
    if (!allow_unconstrained && cls.is_unconstrained())
        throw validation_error("task '" + cfg.task + "' requires a constrained class (k >= 2)");
    return cls;
}

gb_mode mode_of(const task_config& cfg) {
    std::string m = cfg.mode.value_or("all");
    if (m == "first") return gb_mode::first;
    if (m == "all") return gb_mode::all;
    throw validation_error("unknown --mode '" + m + "' (expected first or all)");
}

linear_system parse_forms(const std::string& text) {
    linear_system sys;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ';')) {
        if (part.empty()) continue;
        u64 a = 0, b = 0;
        char comma = 0;
        std::stringstream ps(part);
        if (!(ps >> a >> comma >> b) || comma != ',')
            throw validation_error("cannot parse form '" + part + "' (expected a,b)");
        sys.forms.push_back({a, b});
    }
    if (sys.forms.empty()) throw validation_error("--forms is empty");
    return sys;
}

std::string join_forms(const linear_system& sys) {
    std::string out;
    for (std::size_t i = 0; i < sys.forms.size(); ++i) {
        if (i) out += ';';
        out += std::to_string(sys.forms[i].a) + "," + std::to_string(sys.forms[i].b);
    }
    return out;
}

// key:q pairs; capped so a huge violation set stays a usable report cell
// (violation_count always carries the full total).
std::string join_violations(const std::vector<threshold_violation>& vs) {
    constexpr std::size_t cap = 100;
    std::string out;
    for (std::size_t i = 0; i < vs.size() && i < cap; ++i) {
        if (i) out += ';';
        out += std::to_string(vs[i].key) + ":" + std::to_string(vs[i].q);
    }
    if (vs.size() > cap) out += ";...";
    return out;
}

std::string format_eps(const std::optional<double>& eps) {
    if (!eps) return "";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", *eps);
    return buf;
}

void refuse_scan_flags(const task_config& cfg) {
    if (cfg.checkpoint_path)
        throw validation_error("task '" + cfg.task + "' does not support --checkpoint");
    if (cfg.stop_after)
        throw validation_error("task '" + cfg.task + "' does not support --stop-after");
}

task_result from_outcome(scan_outcome&& oc, std::vector<std::string> columns) {
    task_result res;
    res.columns = std::move(columns);
    res.lines = std::move(oc.lines);
    res.findings = oc.findings;
    res.undecided = oc.undecided;
    res.stopped = oc.stopped;
    return res;
}

task_result run_range_scan(const task_config& cfg, u64 from, u64 to,
                           std::vector<std::string> columns,
                           const std::function<std::vector<report_record>(u64)>& eval) {
    scan_options opt;
    opt.jobs = cfg.jobs;
    opt.stop_after = cfg.stop_after;
    opt.checkpoint_path = cfg.checkpoint_path;
    opt.task = cfg.task;
    opt.param_hash = task_param_hash(cfg);
    opt.fmt = cfg.format;
    return from_outcome(run_scan(from, to, eval, opt), std::move(columns));
}

task_result direct_records(const task_config& cfg, std::vector<std::string> columns,
                           const std::vector<report_record>& records) {
    task_result res;
    res.columns = std::move(columns);
    for (const auto& rec : records) {
        for (const auto& [name, value] : rec.fields) {
            if (name == "verdict") {
                if (const auto* s = std::get_if<std::string>(&value)) {
                    if (*s == "violation" || *s == "counterexample") ++res.findings;
                    if (*s == "undecided") ++res.undecided;
                }
            }
        }
        res.lines.push_back(serialize_record(rec, cfg.format));
    }
    return res;
}

// ---- individual tasks -------------------------------------------------

task_result task_least_prime(const task_config& cfg) {
    refuse_scan_flags(cfg);
    ap_class cls = class_of(cfg, true);
    std::optional<least_prime_record> rec =
        cfg.bound ? least_prime_in_ap(cls, *cfg.bound) : find_least_prime(cls);
    report_record row;
    row.key = cls.modulus();
    row.add("k", cls.modulus()).add("l", cls.residue());
    if (rec) {
        row.add("prime", rec->prime)
            .add("candidates_tested", rec->candidates_tested)
            .add("bound_used", rec->bound_used)
            .add("verdict", std::string("ok"));
    } else {
        row.add("prime", u64{0})
            .add("candidates_tested", u64{0})
            .add("bound_used", cfg.bound.value_or(kLeastPrimeHardCap))
            .add("verdict", std::string("undecided"));
    }
    return direct_records(cfg, {"k", "l", "prime", "candidates_tested", "bound_used", "verdict"},
                          {row});
}

report_record pk_row(u64 k) {
    auto rec = p_max(k);
    report_record row;
    row.key = k;
    if (rec) {
        row.add("k", k)
            .add("p_k", rec->prime)
            .add("achieving_l", rec->residue)
            .add("primes_scanned", rec->primes_scanned)
            .add("bound_used", rec->bound_used)
            .add("verdict", std::string("ok"));
    } else {
        row.add("k", k)
            .add("p_k", u64{0})
            .add("achieving_l", u64{0})
            .add("primes_scanned", u64{0})
            .add("bound_used", kLeastPrimeHardCap)
            .add("verdict", std::string("undecided"));
    }
    return row;
}

task_result task_pk_scan(const task_config& cfg) {
    u64 from = require(cfg.from, "--from"), to = require(cfg.to, "--to");
    if (from < 2 || from > to) throw validation_error("pk-scan: need 2 <= from <= to");
    return run_range_scan(cfg, from, to,
                          {"k", "p_k", "achieving_l", "primes_scanned", "bound_used", "verdict"},
                          [](u64 k) { return std::vector<report_record>{pk_row(k)}; });
}

task_result task_kanold_scan(const task_config& cfg) {
    u64 from = require(cfg.from, "--from"), to = require(cfg.to, "--to");
    if (from < 2 || from > to) throw validation_error("kanold-scan: need 2 <= from <= to");
    return run_range_scan(cfg, from, to, {"k", "p_k", "achieving_l", "bound_used", "verdict"},
                          [](u64 k) {
                              kanold_record r = kanold_check(k);
                              report_record row;
                              row.key = k;
                              row.add("k", r.k)
                                  .add("p_k", r.p_k)
                                  .add("achieving_l", r.residue)
                                  .add("bound_used", r.bound_used)
                                  .add("verdict", std::string(verdict_name(r.v)));
                              return std::vector<report_record>{row};
                          });
}

task_result task_chowla_scan(const task_config& cfg) {
    u64 from = require(cfg.from, "--from"), to = require(cfg.to, "--to");
    if (from < 2 || from > to) throw validation_error("chowla-scan: need 2 <= from <= to");
    task_result res =
        run_range_scan(cfg, from, to, {"k", "p_k", "exponent"}, [](u64 k) {
            chowla_record r = chowla_check(k);
            report_record row;
            row.key = k;
            row.add("k", r.k).add("p_k", r.p_k).add("exponent", r.exponent);
            return std::vector<report_record>{row};
        });
    if (!res.stopped) {
        // max exponent over the emitted rows (column 2 in both formats)
        double best = 0.0;
        u64 best_k = 0;
        for (const auto& line : res.lines) {
            double e = 0.0;
            unsigned long long k = 0;
            if (cfg.format == report_format::csv)
                std::sscanf(line.c_str(), "%llu,%*[0-9],%lf", &k, &e);
            else
                std::sscanf(line.c_str(), "{\"k\":%llu,\"p_k\":%*[0-9],\"exponent\":%lf}", &k, &e);
            if (e > best) {
                best = e;
                best_k = k;
            }
        }
        char buf[128];
        std::snprintf(buf, sizeof(buf), "max exponent %.6f at k=%llu", best,
                      static_cast<unsigned long long>(best_k));
        res.summary = buf;
    }
    return res;
}

task_result task_qm(const task_config& cfg) {
    auto row_for = [](u64 m) {
        report_record row;
        row.key = m;
        row.add("m", m).add("q_m", least_coprime_prime(m)).add("verdict", std::string("ok"));
        return row;
    };
    if (cfg.m) {
        refuse_scan_flags(cfg);
        return direct_records(cfg, {"m", "q_m", "verdict"}, {row_for(*cfg.m)});
    }
    u64 from = require(cfg.from, "--from (or --m)"), to = require(cfg.to, "--to");
    if (from < 1 || from > to) throw validation_error("qm: need 1 <= from <= to");
    return run_range_scan(cfg, from, to, {"m", "q_m", "verdict"},
                          [&](u64 m) { return std::vector<report_record>{row_for(m)}; });
}

task_result task_lemma2_scan(const task_config& cfg) {
    refuse_scan_flags(cfg);
    u64 k_exp = require(cfg.k_exp, "--k-exp");
    u64 bound = require(cfg.bound, "--bound");
    threshold_report rep = lemma2_min_constant(k_exp, bound);
    report_record row;
    row.key = k_exp;
    row.add("k_exp", k_exp)
        .add("scan_bound", bound)
        .add("empirical_constant", rep.empirical_constant)
        .add("violation_count", static_cast<u64>(rep.violations.size()))
        .add("violations", join_violations(rep.violations))
        .add("constructive_bound", rep.constructive_bound.value_or(0))
        .add("verdict", std::string("ok"));
    return direct_records(cfg,
                          {"k_exp", "scan_bound", "empirical_constant", "violation_count",
                           "violations", "constructive_bound", "verdict"},
                          {row});
}

task_result task_posa(const task_config& cfg) {
    refuse_scan_flags(cfg);
    u64 k_exp = require(cfg.k_exp, "--k-exp");
    u64 bound = require(cfg.bound, "--bound");
    ap_class cls = class_of(cfg, true);
    u64 threshold = posa_threshold(k_exp, cls, bound);
    report_record row;
    row.key = k_exp;
    row.add("k_exp", k_exp)
        .add("k", cls.modulus())
        .add("l", cls.residue())
        .add("n_bound", bound)
        .add("threshold", threshold)
        .add("verdict", std::string("ok"));
    return direct_records(cfg, {"k_exp", "k", "l", "n_bound", "threshold", "verdict"}, {row});
}

task_result task_qpow_scan(const task_config& cfg) {
    refuse_scan_flags(cfg);
    u64 k_exp = require(cfg.k_exp, "--k-exp");
    double alpha = require(cfg.alpha, "--alpha");
    u64 bound = require(cfg.bound, "--bound");
    ap_class cls = class_of(cfg, true);
    threshold_report rep = qpow_threshold_scan(k_exp, alpha, cfg.epsilon, cls, bound);
    report_record row;
    row.key = k_exp;
    row.add("k_exp", k_exp)
        .add("alpha", alpha)
        .add("epsilon", format_eps(cfg.epsilon))
        .add("k", cls.modulus())
        .add("l", cls.residue())
        .add("n_bound", bound)
        .add("empirical_constant", rep.empirical_constant)
        .add("violation_count", static_cast<u64>(rep.violations.size()))
        .add("violations", join_violations(rep.violations))
        .add("verdict", std::string("ok"));
    return direct_records(cfg,
                          {"k_exp", "alpha", "epsilon", "k", "l", "n_bound", "empirical_constant",
                           "violation_count", "violations", "verdict"},
                          {row});
}

task_result task_euclid_gen(const task_config& cfg) {
    refuse_scan_flags(cfg);
    u64 count = require(cfg.count, "--count");
    auto seq = euclid_generate(count);
    std::vector<report_record> rows;
    rows.reserve(seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        report_record row;
        row.key = i + 1;
        row.add("index", static_cast<u64>(i + 1)).add("prime", seq[i]);
        rows.push_back(std::move(row));
    }
    return direct_records(cfg, {"index", "prime"}, rows);
}

task_result task_coprime_scan(const task_config& cfg) {
    u64 bound = require(cfg.bound, "--bound");
    if (bound < 3) throw validation_error("coprime-scan: --bound >= 3 required");
    task_result res = run_range_scan(cfg, 3, bound, {"a", "witness", "verdict"}, [](u64 a) {
        u64 witness = 0;
        for (u64 b = 2; b < a; ++b) {
            if (gcd_u64(a, b) == 1) {
                witness = b;
                break;
            }
        }
        report_record row;
        row.key = a;
        row.add("a", a).add("witness", witness)
            .add("verdict", std::string(witness ? "ok" : "violation"));
        return std::vector<report_record>{row};
    });
    if (!res.stopped)
        res.summary = res.findings == 0 ? "coprime witnesses exist for every scanned a"
                                        : "counterexamples found";
    return res;
}

task_result task_goldbach(const task_config& cfg) {
    refuse_scan_flags(cfg);
    u64 target = require(cfg.target, "--target");
    auto pairs = goldbach_decompositions(target, mode_of(cfg));
    std::vector<report_record> rows;
    if (pairs.empty()) {
        report_record row;
        row.add("target", target).add("p", u64{0}).add("q", u64{0})
            .add("verdict", std::string("counterexample"));
        rows.push_back(std::move(row));
    }
    for (const auto& w : pairs) {
        report_record row;
        row.key = w.p;
        row.add("target", w.target).add("p", w.p).add("q", w.q)
            .add("verdict", std::string("witness"));
        rows.push_back(std::move(row));
    }
    return direct_records(cfg, {"target", "p", "q", "verdict"}, rows);
}

task_result task_ap_goldbach(const task_config& cfg) {
    refuse_scan_flags(cfg);
    ap_class cls = class_of(cfg, false);
    u64 w = 0;
    if (cfg.w) {
        w = *cfg.w;
        if (cfg.target && *cfg.target != ap_goldbach_target(cls, w))
            throw validation_error("ap-goldbach: --target disagrees with --w");
    } else {
        u64 target = require(cfg.target, "--target (or --w)");
        if (target % 2 != 0) throw validation_error("ap-goldbach: target must be even");
        u64 half = target / 2;
        if (half < cls.residue() || (half - cls.residue()) % cls.modulus() != 0)
            throw validation_error("ap-goldbach: target must equal 2(k*w + l) for integer w >= 0");
        w = (half - cls.residue()) / cls.modulus();
    }
    u64 target = ap_goldbach_target(cls, w);
    auto pairs = ap_goldbach_decompositions(cls, w, mode_of(cfg));
    std::vector<report_record> rows;
    if (pairs.empty()) {
        report_record row;
        row.add("target", target).add("k", cls.modulus()).add("l", cls.residue())
            .add("p", u64{0}).add("q", u64{0}).add("verdict", std::string("counterexample"));
        rows.push_back(std::move(row));
    }
    for (const auto& gw : pairs) {
        report_record row;
        row.key = gw.p;
        row.add("target", gw.target).add("k", cls.modulus()).add("l", cls.residue())
            .add("p", gw.p).add("q", gw.q).add("verdict", std::string("witness"));
        rows.push_back(std::move(row));
    }
    return direct_records(cfg, {"target", "k", "l", "p", "q", "verdict"}, rows);
}

report_record conj2_row(u64 n, const prime_table* table) {
    auto w = conjecture2_witness(n, table);
    report_record row;
    row.key = n;
    if (w) {
        row.add("n", n).add("p_r", w->p_r).add("difference", w->difference)
            .add("fast_path", w->fast_path).add("verdict", std::string("witness"));
    } else {
        row.add("n", n).add("p_r", u64{0}).add("difference", u64{0})
            .add("fast_path", false).add("verdict", std::string("counterexample"));
    }
    return row;
}

task_result task_conj2_verify(const task_config& cfg) {
    refuse_scan_flags(cfg);
    u64 n = require(cfg.n, "--n");
    return direct_records(cfg, {"n", "p_r", "difference", "fast_path", "verdict"},
                          {conj2_row(n, nullptr)});
}

task_result task_conj2_scan(const task_config& cfg) {
    u64 from = require(cfg.from, "--from"), to = require(cfg.to, "--to");
    if (from <= 6 || from > to) throw validation_error("conj2-scan: need 6 < from <= to");
    prime_table table(std::max({to, u64{64}, cfg.sieve_limit.value_or(0)}));
    task_result res = run_range_scan(
        cfg, from, to, {"n", "p_r", "difference", "fast_path", "verdict"},
        [&table](u64 n) { return std::vector<report_record>{conj2_row(n, &table)}; });
    if (!res.stopped) {
        u64 fast = 0;
        for (const auto& line : res.lines) {
            if (cfg.format == report_format::csv) {
                if (line.find(",true,") != std::string::npos) ++fast;
            } else {
                if (line.find("\"fast_path\":true") != std::string::npos) ++fast;
            }
        }
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "fast-path hit rate %.4f (%llu/%llu), counterexamples %llu",
                      res.lines.empty() ? 0.0 : static_cast<double>(fast) / res.lines.size(),
                      static_cast<unsigned long long>(fast),
                      static_cast<unsigned long long>(res.lines.size()),
                      static_cast<unsigned long long>(res.findings));
        res.summary = buf;
    }
    return res;
}

task_result task_conj3_verify(const task_config& cfg) {
    refuse_scan_flags(cfg);
    ap_class cls = class_of(cfg, false);
    u64 n = require(cfg.n, "--n");
    conj3_result r = conjecture3_witness(cls, n);
    if (r.status == conj3_status::degenerate)
        throw validation_error("conj3-verify: degenerate input (no class prime Q_r with r > 1 "
                               "below kn+l)");
    report_record row;
    row.key = n;
    if (r.status == conj3_status::witness) {
        row.add("k", cls.modulus()).add("l", cls.residue()).add("n", n)
            .add("q_r", r.w->q_r).add("r", r.w->index_r).add("difference", r.w->difference)
            .add("verdict", std::string("witness"));
    } else {
        row.add("k", cls.modulus()).add("l", cls.residue()).add("n", n)
            .add("q_r", u64{0}).add("r", u64{0}).add("difference", u64{0})
            .add("verdict", std::string("counterexample"));
    }
    return direct_records(cfg, {"k", "l", "n", "q_r", "r", "difference", "verdict"}, {row});
}

task_result task_conj4_check(const task_config& cfg) {
    refuse_scan_flags(cfg);
    ap_class cls = class_of(cfg, false);
    conj4_record r = conjecture4_least_prime(cls, require(cfg.d, "--d"), require(cfg.a, "--a"),
                                             require(cfg.epsilon, "--epsilon"));
    report_record row;
    row.key = r.d;
    row.add("k", cls.modulus()).add("l", cls.residue()).add("d", r.d).add("a", r.a)
        .add("epsilon", r.epsilon).add("q", r.q).add("bound", r.bound)
        .add("within_bound", r.within_bound).add("verdict", std::string(verdict_name(r.v)));
    return direct_records(
        cfg, {"k", "l", "d", "a", "epsilon", "q", "bound", "within_bound", "verdict"}, {row});
}

task_result task_lemma1(const task_config& cfg) {
    refuse_scan_flags(cfg);
    u64 n = require(cfg.n, "--n");
    auto [p, q] = lemma1_witness(n);
    report_record row;
    row.key = n;
    row.add("n", n).add("p", p).add("q", q).add("verdict", std::string("ok"));
    return direct_records(cfg, {"n", "p", "q", "verdict"}, {row});
}

task_result task_lemma7(const task_config& cfg) {
    refuse_scan_flags(cfg);
    ap_class cls = class_of(cfg, true);
    u64 p = require(cfg.p, "--p");
    u64 n = require(cfg.n, "--n");
    auto pair = lemma7_witness(cls, p, n);
    report_record row;
    row.key = n;
    row.add("k", cls.modulus()).add("l", cls.residue()).add("p", p).add("n", n);
    if (pair)
        row.add("p1", pair->first).add("p2", pair->second).add("verdict", std::string("ok"));
    else
        row.add("p1", u64{0}).add("p2", u64{0}).add("verdict", std::string("undecided"));
    return direct_records(cfg, {"k", "l", "p", "n", "p1", "p2", "verdict"}, {row});
}

task_result task_bertrand_ap(const task_config& cfg) {
    ap_class cls = class_of(cfg, false);
    u64 from = require(cfg.from, "--from"), to = require(cfg.to, "--to");
    if (from < 1 || from > to) throw validation_error("bertrand-ap: need 1 <= from <= to");
    return run_range_scan(cfg, from, to, {"x", "g", "prime", "verdict"}, [cls](u64 x) {
        bertrand_record r = bertrand_ap_check_one(cls, x);
        report_record row;
        row.key = x;
        row.add("x", r.x).add("g", r.g).add("prime", r.prime)
            .add("verdict", std::string(verdict_name(r.v)));
        return std::vector<report_record>{row};
    });
}

report_record matrix_row(u64 n) {
    matrix_report rep = matrix_prime_check(n);
    u64 rows_ok = 0, cols_ok = 0;
    for (char c : rep.rows_ok) rows_ok += c != 0;
    for (char c : rep.cols_ok) cols_ok += c != 0;
    report_record row;
    row.key = n;
    row.add("n", n).add("phi", rep.phi).add("rows_ok", rows_ok).add("cols_ok", cols_ok)
        .add("first_missing_row", rep.first_missing_row().value_or(0))
        .add("first_missing_col", rep.first_missing_col().value_or(0))
        .add("verdict", std::string(rep.all_ok() ? "ok" : "violation"));
    return row;
}

task_result task_matrix_check(const task_config& cfg) {
    std::vector<std::string> cols = {"n",       "phi",
                                     "rows_ok", "cols_ok",
                                     "first_missing_row", "first_missing_col",
                                     "verdict"};
    if (cfg.n) {
        refuse_scan_flags(cfg);
        return direct_records(cfg, cols, {matrix_row(*cfg.n)});
    }
    u64 from = require(cfg.from, "--from (or --n)"), to = require(cfg.to, "--to");
    if (from < 2 || from > to) throw validation_error("matrix-check: need 2 <= from <= to");
    return run_range_scan(cfg, from, to, cols,
                          [](u64 n) { return std::vector<report_record>{matrix_row(n)}; });
}

task_result task_admissible(const task_config& cfg) {
    refuse_scan_flags(cfg);
    if (!cfg.forms) throw validation_error("missing required option --forms");
    linear_system sys = parse_forms(*cfg.forms);
    admissible_verdict v = admissible_check(sys);
    report_record row;
    row.add("forms", join_forms(sys))
        .add("m", static_cast<u64>(sys.forms.size()))
        .add("admissible", v.admissible)
        .add("blocking_prime", v.blocking_prime.value_or(0))
        .add("degenerate_form", v.degenerate_index ? static_cast<i64>(*v.degenerate_index)
                                                   : i64{-1})
        .add("verdict", std::string("ok"));
    return direct_records(
        cfg, {"forms", "m", "admissible", "blocking_prime", "degenerate_form", "verdict"}, {row});
}

report_record f1f2_row(u64 n, u64 width_cap, bool scan_mode) {
    f1f2_result r = f1f2_search(n, width_cap);
    report_record row;
    row.key = n;
    row.add("n", n).add("phi", r.phi);
    switch (r.st) {
        case f1f2_result::status::found: {
            std::string perm;
            for (std::size_t i = 0; i < r.permutation.size(); ++i) {
                if (i) perm += ';';
                perm += std::to_string(r.permutation[i]);
            }
            row.add("permutation", perm).add("verdict", std::string("ok"));
            break;
        }
        case f1f2_result::status::exhausted:
            row.add("permutation", std::string("")).add("verdict", std::string("counterexample"));
            break;
        case f1f2_result::status::width_exceeded:
            if (!scan_mode)
                throw validation_error("f1f2-search: phi(n) exceeds the search width (raise "
                                       "--width, factorial search)");
            row.add("permutation", std::string("")).add("verdict", std::string("undecided"));
            break;
    }
    return row;
}

task_result task_f1f2_search(const task_config& cfg) {
    u64 width = cfg.width.value_or(12);
    std::vector<std::string> cols = {"n", "phi", "permutation", "verdict"};
    if (cfg.n) {
        refuse_scan_flags(cfg);
        return direct_records(cfg, cols, {f1f2_row(*cfg.n, width, false)});
    }
    u64 from = require(cfg.from, "--from (or --n)"), to = require(cfg.to, "--to");
    if (from < 2 || from > to) throw validation_error("f1f2-search: need 2 <= from <= to");
    return run_range_scan(cfg, from, to, cols, [width](u64 n) {
        return std::vector<report_record>{f1f2_row(n, width, true)};
    });
}

task_result task_prime_map_check(const task_config& cfg) {
    refuse_scan_flags(cfg);
    if (!cfg.forms && !cfg.witness_for)
        throw validation_error("prime-map-check: need --forms and/or --witness-for");
    std::vector<report_record> rows;
    if (cfg.forms) {
        linear_system sys = parse_forms(*cfg.forms);
        bool standard = standard_prime_map_check(sys);
        report_record row;
        row.key = 0;
        row.add("query", std::string("prime-map")).add("input", join_forms(sys))
            .add("result", std::string(standard ? "true" : "false"))
            .add("verdict", std::string("ok"));
        rows.push_back(std::move(row));
    }
    if (cfg.witness_for) {
        u64 b = bertrand_witness_b(*cfg.witness_for);
        report_record row;
        row.key = 1;
        row.add("query", std::string("bertrand-witness"))
            .add("input", std::to_string(*cfg.witness_for))
            .add("result", std::to_string(b))
            .add("verdict", std::string("ok"));
        rows.push_back(std::move(row));
    }
    return direct_records(cfg, {"query", "input", "result", "verdict"}, rows);
}

} // namespace

std::string task_param_hash(const task_config& cfg) {
    std::string s = "task=" + cfg.task;
    auto put_u = [&s](const char* name, const std::optional<u64>& v) {
        if (v) s += std::string(";") + name + "=" + std::to_string(*v);
    };
    auto put_d = [&s](const char* name, const std::optional<double>& v) {
        if (v) {
            char buf[40];
            std::snprintf(buf, sizeof(buf), ";%s=%.17g", name, *v);
            s += buf;
        }
    };
    put_u("from", cfg.from);
    put_u("to", cfg.to);
    put_u("k", cfg.k);
    put_u("l", cfg.l);
    put_u("d", cfg.d);
    put_u("a", cfg.a);
    put_u("m", cfg.m);
    put_u("n", cfg.n);
    put_u("p", cfg.p);
    put_u("w", cfg.w);
    put_u("target", cfg.target);
    put_u("count", cfg.count);
    put_u("bound", cfg.bound);
    put_u("k_exp", cfg.k_exp);
    put_u("width", cfg.width);
    put_u("witness_for", cfg.witness_for);
    put_d("alpha", cfg.alpha);
    put_d("epsilon", cfg.epsilon);
    if (cfg.mode) s += ";mode=" + *cfg.mode;
    if (cfg.forms) s += ";forms=" + *cfg.forms;
    put_u("sieve_limit", cfg.sieve_limit);
    s += std::string(";format=") + (cfg.format == report_format::csv ? "csv" : "jsonl");
    return fnv1a_hex(s);
}

const std::vector<std::string>& task_names() {
    static const std::vector<std::string> names = {
        "least-prime", "pk-scan",     "kanold-scan", "chowla-scan",    "qm",
        "lemma2-scan", "posa",        "qpow-scan",   "euclid-gen",     "coprime-scan",
        "goldbach",    "ap-goldbach", "conj2-verify", "conj2-scan",    "conj3-verify",
        "conj4-check", "lemma1",      "lemma7",      "bertrand-ap",    "matrix-check",
        "admissible",  "f1f2-search", "prime-map-check",
    };
    return names;
}

int run_task(const task_config& cfg, std::ostream& stream, std::ostream& err) {
    auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [t0] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };
    try {
        task_result res;
        if (cfg.task == "least-prime") res = task_least_prime(cfg);
        else if (cfg.task == "pk-scan") res = task_pk_scan(cfg);
        else if (cfg.task == "kanold-scan") res = task_kanold_scan(cfg);
        else if (cfg.task == "chowla-scan") res = task_chowla_scan(cfg);
        else if (cfg.task == "qm") res = task_qm(cfg);
        else if (cfg.task == "lemma2-scan") res = task_lemma2_scan(cfg);
        else if (cfg.task == "posa") res = task_posa(cfg);
        else if (cfg.task == "qpow-scan") res = task_qpow_scan(cfg);
        else if (cfg.task == "euclid-gen") res = task_euclid_gen(cfg);
        else if (cfg.task == "coprime-scan") res = task_coprime_scan(cfg);
        else if (cfg.task == "goldbach") res = task_goldbach(cfg);
        else if (cfg.task == "ap-goldbach") res = task_ap_goldbach(cfg);
        else if (cfg.task == "conj2-verify") res = task_conj2_verify(cfg);
        else if (cfg.task == "conj2-scan") res = task_conj2_scan(cfg);
        else if (cfg.task == "conj3-verify") res = task_conj3_verify(cfg);
        else if (cfg.task == "conj4-check") res = task_conj4_check(cfg);
        else if (cfg.task == "lemma1") res = task_lemma1(cfg);
        else if (cfg.task == "lemma7") res = task_lemma7(cfg);
        else if (cfg.task == "bertrand-ap") res = task_bertrand_ap(cfg);
        else if (cfg.task == "matrix-check") res = task_matrix_check(cfg);
        else if (cfg.task == "admissible") res = task_admissible(cfg);
        else if (cfg.task == "f1f2-search") res = task_f1f2_search(cfg);
        else if (cfg.task == "prime-map-check") res = task_prime_map_check(cfg);
        else throw validation_error("unknown task '" + cfg.task + "'");

        if (res.stopped) {
            err << "stopped at user request; checkpoint saved, report not written\n";
            return kExitStopped;
        }
        std::string header =
            cfg.format == report_format::csv ? csv_header(res.columns) : std::string{};
        if (cfg.out) {
            write_report_file(*cfg.out, header, res.lines);
        } else {
            if (!header.empty()) stream << header << '\n';
            for (const auto& line : res.lines) stream << line << '\n';
        }
        if (!res.summary.empty()) err << res.summary << '\n';
        {
            char buf[96];
            std::snprintf(buf, sizeof(buf), "%s: %zu record(s) in %.2fs\n", cfg.task.c_str(),
                          res.lines.size(), elapsed());
            err << buf;
        }
        if (res.findings > 0) return kExitFinding;
        if (cfg.task == "conj4-check" && res.undecided > 0) return kExitFinding;
        return kExitOk;
    } catch (const validation_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}

} // namespace aplab
