#include "aplab/linear_systems.hpp"

#include <algorithm>
#include <cmath>

namespace aplab {

void validate_system(const linear_system& sys) {
    if (sys.forms.empty()) throw validation_error("linear system: at least one form required");
    for (const auto& f : sys.forms)
        if (f.a < 1) throw validation_error("linear system: coefficients must be >= 1");
    for (std::size_t i = 0; i < sys.forms.size(); ++i)
        for (std::size_t j = i + 1; j < sys.forms.size(); ++j)
            if (sys.forms[i] == sys.forms[j])
                throw validation_error("linear system: duplicate form");
}

namespace {

u64 least_prime_factor(u64 v) {
    if (v % 2 == 0) return 2;
    for (u64 d = 3; d * d <= v; d += 2)
        if (v % d == 0) return d;
    return v;
}

// Some x in 0..p-1 keeps every form nonzero mod p?
bool has_free_residue(const std::vector<linear_form>& forms, u64 p) {
    for (u64 x = 0; x < p; ++x) {
        bool free = true;
        for (const auto& f : forms) {
            if ((f.a % p * x + f.b) % p == 0) {
                free = false;
                break;
            }
        }
        if (free) return true;
    }
    return false;
}

} // namespace

admissible_verdict admissible_check(const linear_system& sys) {
    validate_system(sys);
    for (std::size_t i = 0; i < sys.forms.size(); ++i) {
        u64 g = gcd_u64(sys.forms[i].a, sys.forms[i].b);
        if (g > 1) return {false, least_prime_factor(g), i};
    }
    u64 m = sys.forms.size();
    // candidate blockers: p <= m, plus primes dividing some coefficient
    std::vector<u64> candidates;
    prime_stream ps;
    for (;;) {
        u64 p = ps.next();
        if (p > m) break;
        candidates.push_back(p);
    }
    for (const auto& f : sys.forms) {
        u64 rest = f.a;
        for (u64 d = 2; d * d <= rest; d += (d == 2) ? 1 : 2) {
            if (rest % d == 0) {
                candidates.push_back(d);
                while (rest % d == 0) rest /= d;
            }
        }
        if (rest > 1) candidates.push_back(rest);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (u64 p : candidates)
        if (!has_free_residue(sys.forms, p)) return {false, p, std::nullopt};
    return {true, std::nullopt, std::nullopt};
}

namespace {

struct f1f2_searcher {
    u64 n;
    std::vector<u64> bs;      // coprimes of n, position-indexed
    std::vector<u64> primes;  // primes <= phi
    u64 phi;

    // alive residue bitmaps per prime, for F1 and F2; rebuilt on descent
    struct level_state {
        std::vector<u64> alive1;
        std::vector<u64> alive2;
    };

    std::vector<u64> result;

    bool dfs(std::size_t pos, u64 used_mask, const level_state& st) {
        if (pos == phi) return true;
        u64 b = bs[pos];
        for (u64 a = 1; a <= phi; ++a) {
            if (used_mask & (u64{1} << a)) continue;
            if (gcd_u64(a, b) != 1) continue;                 // F1 form degenerate
            if (gcd_u64(checked_mul(a, n), b) != 1) continue; // F2 form degenerate
            level_state next = st;
            bool dead = false;
            for (std::size_t pi = 0; pi < primes.size(); ++pi) {
                u64 p = primes[pi];
                u64 a1 = a % p, a2 = checked_mul(a, n) % p, bm = b % p;
                u64 m1 = next.alive1[pi], m2 = next.alive2[pi];
                for (u64 x = 0; x < p; ++x) {
                    if ((a1 * x + bm) % p == 0) m1 &= ~(u64{1} << x);
                    if ((a2 * x + bm) % p == 0) m2 &= ~(u64{1} << x);
                }
                next.alive1[pi] = m1;
                next.alive2[pi] = m2;
                if (m1 == 0 || m2 == 0) {
                    dead = true;
                    break;
                }
            }
            if (dead) continue;
            result.push_back(a);
            if (dfs(pos + 1, used_mask | (u64{1} << a), next)) return true;
            result.pop_back();
        }
        return false;
    }
};

} // namespace

f1f2_result f1f2_search(u64 n, u64 width_cap) {
    if (n < 2) throw validation_error("f1f2_search: n >= 2 required");
    f1f2_searcher s;
    s.n = n;
    s.bs = coprimes_of(n);
    s.phi = s.bs.size();
    f1f2_result res;
    res.phi = s.phi;
    if (s.phi > width_cap || s.phi > 63) {
        res.st = f1f2_result::status::width_exceeded;
        return res;
    }
    {
        prime_stream ps;
        for (;;) {
            u64 p = ps.next();
            if (p > s.phi) break;
            s.primes.push_back(p);
        }
    }
    f1f2_searcher::level_state st;
    for (u64 p : s.primes) {
        st.alive1.push_back((p >= 64) ? ~u64{0} : ((u64{1} << p) - 1));
        st.alive2.push_back((p >= 64) ? ~u64{0} : ((u64{1} << p) - 1));
    }
    if (s.dfs(0, 0, st)) {
        // the pruning is exact for p <= phi, but re-validate end to end
        linear_system f1, f2;
        for (std::size_t i = 0; i < s.phi; ++i) {
            f1.forms.push_back({s.result[i], s.bs[i]});
            f2.forms.push_back({checked_mul(s.result[i], n), s.bs[i]});
        }
        if (!admissible_check(f1).admissible || !admissible_check(f2).admissible)
            throw error("f1f2_search: pruning accepted an inadmissible permutation");
        res.st = f1f2_result::status::found;
        res.permutation = s.result;
        return res;
    }
    res.st = f1f2_result::status::exhausted;
    return res;
}

bool matrix_report::all_ok() const {
    return std::all_of(rows_ok.begin(), rows_ok.end(), [](char c) { return c != 0; }) &&
           std::all_of(cols_ok.begin(), cols_ok.end(), [](char c) { return c != 0; });
}

std::optional<u64> matrix_report::first_missing_row() const {
    for (std::size_t i = 0; i < rows_ok.size(); ++i)
        if (!rows_ok[i]) return i + 1;
    return std::nullopt;
}

std::optional<u64> matrix_report::first_missing_col() const {
    for (std::size_t j = 0; j < cols_ok.size(); ++j)
        if (!cols_ok[j]) return j + 1;
    return std::nullopt;
}

matrix_report matrix_prime_check(u64 n) {
    if (n < 2) throw validation_error("matrix_prime_check: n >= 2 required");
    matrix_report rep;
    rep.n = n;
    auto cop = coprimes_of(n);
    rep.phi = cop.size();
    rep.rows_ok.assign(rep.phi, 0);
    rep.cols_ok.assign(rep.phi, 0);
    rep.row_witness.assign(rep.phi, 0);
    rep.col_witness.assign(rep.phi, 0);
    for (std::size_t i = 0; i < rep.phi; ++i) {
        for (std::size_t j = 0; j < rep.phi; ++j) {
            u64 entry = checked_add(cop[i], checked_mul(j + 1, n));
            if (is_prime(entry)) {
                if (!rep.rows_ok[i]) {
                    rep.rows_ok[i] = 1;
                    rep.row_witness[i] = entry;
                }
                if (!rep.cols_ok[j]) {
                    rep.cols_ok[j] = 1;
                    rep.col_witness[j] = entry;
                }
            }
        }
    }
    return rep;
}

conj4_record conjecture4_least_prime(const ap_class& cls, u64 d, u64 a, double epsilon,
                                     u64 cap_multiplier) {
    if (cls.is_unconstrained())
        throw validation_error("conjecture4_least_prime: constrained class (k >= 2) required");
    if (cap_multiplier < 1)
        throw validation_error("conjecture4_least_prime: cap_multiplier >= 1 required");
    if (d < 2) throw validation_error("conjecture4_least_prime: d >= 2 required");
    if (a < 1 || a >= d) throw validation_error("conjecture4_least_prime: 1 <= a < d required");
    if (gcd_u64(a, d) != 1) throw non_coprime_error("conjecture4_least_prime: gcd(a, d) = 1 required");
    if (gcd_u64(d, cls.modulus()) != 1)
        throw non_coprime_error("conjecture4_least_prime: gcd(d, k) = 1 required");
    if (epsilon <= 0.0 || epsilon >= 0.5)
        throw validation_error("conjecture4_least_prime: epsilon must lie in (0, 0.5)");

    conj4_record rec;
    rec.cls = cls;
    rec.d = d;
    rec.a = a;
    rec.epsilon = epsilon;
    rec.merged = crt_merge(crt_class(a, d), crt_class(cls.residue(), cls.modulus()));
    u64 dk = checked_mul(d, cls.modulus());
    rec.bound = std::pow(static_cast<double>(dk), 2.0 - epsilon);
    rec.search_cap = static_cast<u64>(std::ceil(rec.bound * static_cast<double>(cap_multiplier)));

    for (u64 v = rec.merged.residue == 0 ? rec.merged.modulus : rec.merged.residue;;) {
        if (v > rec.search_cap) break;
        if (v >= 2 && is_prime(v)) {
            rec.q = v;
            rec.within_bound = static_cast<double>(v) < rec.bound;
            rec.v = rec.within_bound ? verdict::witness : verdict::violation;
            return rec;
        }
        u64 nv = v + rec.merged.modulus;
        if (nv < v) break;
        v = nv;
    }
    rec.v = verdict::undecided;
    return rec;
}

bool standard_prime_map_check(const linear_system& sys) {
    validate_system(sys);
    for (const auto& f : sys.forms)
        if (!is_prime(checked_add(f.a, f.b))) return false;
    return true;
}

u64 bertrand_witness_b(u64 a) {
    if (a < 2) throw validation_error("bertrand_witness_b: a > 1 required");
    for (u64 b = 1; b < a; ++b)
        if (is_prime(checked_add(a, b))) return b;
    throw error("bertrand_witness_b: no prime in (a, 2a) (contradicts Bertrand-Chebyshev)");
}

} // namespace aplab
