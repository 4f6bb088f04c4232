#include "aplab/goldbach.hpp"

#include <algorithm>
#include <cmath>

namespace aplab {

std::vector<goldbach_witness> goldbach_decompositions(u64 target, gb_mode mode) {
    if (target < 8 || target % 2 != 0)
        throw validation_error("goldbach_decompositions: target must be even and >= 8");
    std::vector<goldbach_witness> out;
    for (u64 p = 3; p < target - p; p += 2) {
        if (is_prime(p) && is_prime(target - p)) {
            out.push_back({target, p, target - p, ap_class::unconstrained()});
            if (mode == gb_mode::first) break;
        }
    }
    return out;
}

u64 ap_goldbach_target(const ap_class& cls, u64 w) {
    return checked_mul(2, checked_add(checked_mul(cls.modulus(), w), cls.residue()));
}

std::vector<goldbach_witness> ap_goldbach_decompositions(const ap_class& cls, u64 w, gb_mode mode) {
    if (cls.is_unconstrained()) {
        auto out = goldbach_decompositions(ap_goldbach_target(cls, w), mode);
        return out;
    }
    u64 target = ap_goldbach_target(cls, w);
    u64 k = cls.modulus(), l = cls.residue();
    std::vector<goldbach_witness> out;
    // p = l (mod k) forces q = target - p = l (mod k) as well
    for (u64 p = l; p < target - p; p += k) {
        if (p >= 2 && is_prime(p) && is_prime(target - p)) {
            out.push_back({target, p, target - p, cls});
            if (mode == gb_mode::first) break;
        }
    }
    return out;
}

bool validate_goldbach_witness(const goldbach_witness& w) {
    return w.p < w.q && w.p + w.q == w.target && is_prime(w.p) && is_prime(w.q) &&
           w.cls.contains(w.p) && w.cls.contains(w.q);
}

namespace {

// Distinct prime factors of v by trial division against table primes
// (table limit >= sqrt(v)), with a prime cofactor possible at the end.
std::vector<u64> distinct_prime_factors(u64 v, const prime_table& table) {
    std::vector<u64> out;
    u64 rest = v;
    table.for_each_prime(2, table.limit(), [&](u64 p) {
        if (u128(p) * p > rest) return false;
        if (rest % p == 0) {
            out.push_back(p);
            while (rest % p == 0) rest /= p;
        }
        return true;
    });
    if (rest > 1) out.push_back(rest);
    return out;
}

// Does any odd prime c < n with c != exclude satisfy c = 2n (mod s)?
bool sibling_in_class(u64 n, u64 s, u64 exclude, const prime_table& table) {
    u64 c0 = (2 * n) % s;
    if (c0 == 0) c0 = s;
    for (u64 c = c0; c < n; c += s) {
        if (c == exclude || c < 3 || c % 2 == 0) continue;
        if (table.contains(c)) return true;
    }
    return false;
}

} // namespace

std::optional<conj2_witness> conjecture2_witness(u64 n, const prime_table* shared) {
    if (n <= 6) throw validation_error("conjecture2_witness: n > 6 required");
    std::optional<prime_table> local;
    const prime_table* table = shared;
    if (!table || table->limit() < n) {
        local.emplace(std::max<u64>(n, 64));
        table = &*local;
    }
    std::optional<conj2_witness> found;
    table->for_each_prime(3, n - 1, [&](u64 p) {
        if (gcd_u64(p, n) != 1) return true;
        u64 d = 2 * n - p;
        if (is_prime(d)) { // d > n, so d | (2n - p_i) would force p_i = p
            found = conj2_witness{n, p, d, true};
            return false;
        }
        bool ok = true;
        for (u64 s : distinct_prime_factors(d, *table)) {
            if (sibling_in_class(n, s, p, *table)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            found = conj2_witness{n, p, d, false};
            return false;
        }
        return true;
    });
    return found;
}

bool conj2_slow_verify(u64 n, u64 p_r) {
    if (n <= 6 || p_r >= n || p_r < 3 || p_r % 2 == 0) return false;
    if (!is_prime(p_r) || gcd_u64(p_r, n) != 1) return false;
    u64 d = 2 * n - p_r;
    prime_table table(n);
    bool ok = true;
    table.for_each_prime(3, n - 1, [&](u64 p) {
        if (p != p_r && gcd_u64(d, 2 * n - p) != 1) {
            ok = false;
            return false;
        }
        return true;
    });
    return ok;
}

conj2_scan_report conjecture2_scan(u64 n_from, u64 n_to) {
    if (n_from <= 6 || n_from > n_to)
        throw validation_error("conjecture2_scan: need 6 < n_from <= n_to");
    prime_table table(std::max<u64>(n_to, 64));
    conj2_scan_report rep;
    for (u64 n = n_from; n <= n_to; ++n) {
        auto w = conjecture2_witness(n, &table);
        if (w) {
            rep.records.push_back({n, w->p_r, w->difference, w->fast_path, verdict::witness});
            if (w->fast_path) ++rep.fast_hits;
        } else {
            rep.records.push_back({n, 0, 0, false, verdict::counterexample});
            ++rep.counterexamples;
        }
    }
    return rep;
}

conj3_result conjecture3_witness(const ap_class& cls, u64 n) {
    if (cls.is_unconstrained())
        throw validation_error("conjecture3_witness: constrained class (k >= 2) required");
    u64 t = checked_add(checked_mul(cls.modulus(), n), cls.residue());
    u64 target = checked_mul(2, t);

    std::vector<u64> qs; // class primes <= t, ascending (Q_1, Q_2, ...)
    for (u64 v = cls.residue();;) {
        if (v > t) break;
        if (v >= 2 && is_prime(v)) qs.push_back(v);
        u64 nv = v + cls.modulus();
        if (nv < v) break;
        v = nv;
    }

    conj3_result res;
    bool have_candidate = false;
    for (std::size_t i = 1; i < qs.size(); ++i) { // index_r = i+1 >= 2
        u64 qr = qs[i];
        if (qr >= t) break;
        have_candidate = true;
        if (gcd_u64(t, qr) != 1) continue;
        u64 d = target - qr;
        bool ok = true;
        for (u64 q : qs) {
            if (q != qr && gcd_u64(d, target - q) != 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            res.status = conj3_status::witness;
            res.w = conj3_witness{cls, n, qr, static_cast<u64>(i + 1), d};
            return res;
        }
    }
    res.status = have_candidate ? conj3_status::no_witness : conj3_status::degenerate;
    return res;
}

std::pair<u64, u64> lemma1_witness(u64 n) {
    if (n <= 6) throw validation_error("lemma1_witness: n > 6 required");
    u64 first = 0;
    for (u64 v = 3; v < n; v += 2) {
        if (gcd_u64(v, n) == 1 && is_prime(v)) {
            if (first == 0)
                first = v;
            else
                return {first, v};
        }
    }
    throw error("lemma1_witness: no pair below " + std::to_string(n) +
                " (contradicts the n > 6 guarantee)");
}

std::optional<std::pair<u64, u64>> lemma7_witness(const ap_class& cls, u64 p, u64 n) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw validation_error("lemma7_witness: p must be an odd prime");
    if (gcd_u64(p, cls.modulus()) != 1)
        throw validation_error("lemma7_witness: gcd(p, k) = 1 required");
    u64 t = checked_add(checked_mul(cls.modulus(), n), cls.residue());
    if (gcd_u64(p, t) != 1)
        throw validation_error("lemma7_witness: gcd(p, kn+l) = 1 required");
    u64 target_mod_p = checked_mul(2, t) % p;
    crt_class merged = crt_merge(crt_class(cls.residue() % cls.modulus(), cls.modulus()),
                                 crt_class(target_mod_p, p));
    u64 first = 0;
    for (u64 v = merged.residue == 0 ? merged.modulus : merged.residue;;) {
        if (v > t) break;
        if (v >= 3 && v % 2 == 1 && gcd_u64(v, t) == 1 && is_prime(v)) {
            if (first == 0)
                first = v;
            else
                return std::make_pair(first, v);
        }
        u64 nv = v + merged.modulus;
        if (nv < v) break;
        v = nv;
    }
    return std::nullopt;
}

bertrand_record bertrand_ap_check_one(const ap_class& cls, u64 x) {
    if (cls.is_unconstrained())
        throw validation_error("bertrand_ap_check: constrained class (k >= 2) required");
    if (x < 1) throw validation_error("bertrand_ap_check: x >= 1 required");
    u64 g = checked_add(checked_mul(cls.modulus(), x), cls.residue());
    u64 top = checked_mul(2, g);
    for (u64 v = g + cls.modulus(); v < top; v += cls.modulus())
        if (is_prime(v)) return {x, g, v, verdict::ok};
    return {x, g, 0, verdict::violation};
}

std::vector<bertrand_record> bertrand_ap_check(const ap_class& cls, u64 x_from, u64 x_to) {
    if (x_from > x_to) throw validation_error("bertrand_ap_check: x_from <= x_to required");
    std::vector<bertrand_record> out;
    out.reserve(x_to - x_from + 1);
    for (u64 x = x_from; x <= x_to; ++x) out.push_back(bertrand_ap_check_one(cls, x));
    return out;
}

} // namespace aplab
