#include "aplab/least_prime.hpp"

#include <algorithm>
#include <cmath>

namespace aplab {

namespace {

// Enough primes to answer q(m) for any 64-bit m: the product of the first
// 16 primes already exceeds 2^64, so q(m) <= 53.
constexpr u64 kSmallPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};

// Ascending primes of a class; the unconstrained variant streams all primes.
class class_prime_stream {
public:
    explicit class_prime_stream(const ap_class& cls) : cls_(cls), t_(0) {
        if (cls_.is_unconstrained()) all_.emplace(2);
    }

    u64 next() {
        if (all_) return all_->next();
        for (;;) {
            u64 v = checked_add(checked_mul(cls_.modulus(), t_), cls_.residue());
            ++t_;
            if (v >= 2 && is_prime(v)) return v;
        }
    }

private:
    ap_class cls_;
    u64 t_;
    std::optional<prime_stream> all_;
};

} // namespace

const char* verdict_name(verdict v) {
    switch (v) {
        case verdict::ok: return "ok";
        case verdict::violation: return "violation";
        case verdict::counterexample: return "counterexample";
        case verdict::undecided: return "undecided";
        case verdict::witness: return "witness";
        case verdict::degenerate: return "degenerate";
    }
    return "?";
}

std::optional<least_prime_record> least_prime_in_ap(const ap_class& cls, u64 bound) {
    if (bound < 2) throw validation_error("least_prime_in_ap: bound >= 2 required");
    u64 k = cls.modulus(), l = cls.residue();
    u64 tested = 0;
    for (u64 v = l;;) {
        if (v > bound) break;
        ++tested;
        if (is_prime(v)) return least_prime_record{cls, v, tested, bound};
        u64 nv = v + k;
        if (nv < v) break; // wrapped past 2^64
        v = nv;
    }
    return std::nullopt;
}

std::optional<least_prime_record> find_least_prime(const ap_class& cls) {
    u64 bound = default_search_bound(cls.modulus());
    for (;;) {
        if (auto rec = least_prime_in_ap(cls, bound)) return rec;
        if (bound >= kLeastPrimeHardCap) return std::nullopt;
        bound = (bound > kLeastPrimeHardCap / 2) ? kLeastPrimeHardCap : bound * 2;
    }
}

u64 euler_phi(u64 n) {
    if (n < 1) throw validation_error("euler_phi: n >= 1 required");
    u64 result = n;
    u64 rest = n;
    for (u64 d = 2; d * d <= rest; d += (d == 2) ? 1 : 2) {
        if (rest % d == 0) {
            result -= result / d;
            while (rest % d == 0) rest /= d;
        }
    }
    if (rest > 1) result -= result / rest;
    return result;
}

std::optional<p_max_record> p_max(u64 k, u64 hard_cap) {
    if (k < 2) throw validation_error("p_max: k >= 2 required");
    u64 phi = euler_phi(k);
    std::vector<char> covered(k, 0);
    u64 ncov = 0, scanned = 0;
    u64 bound = std::min(default_search_bound(k), hard_cap);
    prime_stream ps;
    for (;;) {
        u64 p = ps.next();
        while (p > bound) {
            if (bound >= hard_cap) return std::nullopt;
            bound = (bound > hard_cap / 2) ? hard_cap : bound * 2;
        }
        ++scanned;
        u64 r = p % k;
        if (gcd_u64(r, k) == 1 && !covered[r]) {
            covered[r] = 1;
            if (++ncov == phi) return p_max_record{k, p, r, scanned, bound};
        }
    }
}

kanold_record kanold_check(u64 k) {
    auto rec = p_max(k);
    if (!rec) return kanold_record{k, 0, 0, kLeastPrimeHardCap, verdict::undecided};
    bool viol = u128(rec->prime) >= u128(k) * k;
    return kanold_record{k, rec->prime, rec->residue, rec->bound_used,
                         viol ? verdict::violation : verdict::ok};
}

std::vector<kanold_record> kanold_scan(u64 k_from, u64 k_to) {
    if (k_from < 2 || k_from > k_to) throw validation_error("kanold_scan: need 2 <= k_from <= k_to");
    std::vector<kanold_record> out;
    out.reserve(k_to - k_from + 1);
    for (u64 k = k_from; k <= k_to; ++k) out.push_back(kanold_check(k));
    return out;
}

chowla_record chowla_check(u64 k) {
    auto rec = p_max(k);
    if (!rec) return chowla_record{k, 0, 0, 0.0, verdict::undecided};
    double e = std::log(static_cast<double>(rec->prime)) / std::log(static_cast<double>(k));
    return chowla_record{k, rec->prime, rec->residue, e, verdict::ok};
}

chowla_report chowla_exponent_scan(u64 k_from, u64 k_to) {
    if (k_from < 2 || k_from > k_to) throw validation_error("chowla_exponent_scan: need 2 <= k_from <= k_to");
    chowla_report rep;
    for (u64 k = k_from; k <= k_to; ++k) rep.by_exponent.push_back(chowla_check(k));
    std::stable_sort(rep.by_exponent.begin(), rep.by_exponent.end(),
                     [](const chowla_record& a, const chowla_record& b) { return a.exponent > b.exponent; });
    if (!rep.by_exponent.empty()) {
        rep.max_exponent = rep.by_exponent.front().exponent;
        rep.achieving_k = rep.by_exponent.front().k;
    }
    return rep;
}

u64 least_coprime_prime(u64 m) {
    if (m < 1) throw validation_error("least_coprime_prime: m >= 1 required");
    for (u64 p : kSmallPrimes)
        if (m % p != 0) return p;
    throw error("least_coprime_prime: no small prime coprime to m (impossible for 64-bit m)");
}

std::optional<u64> least_ap_coprime_prime(const ap_class& cls, u64 m, u64 bound) {
    if (m < 1) throw validation_error("least_ap_coprime_prime: m >= 1 required");
    class_prime_stream qs(cls);
    for (;;) {
        u64 q = qs.next();
        if (q > bound) return std::nullopt;
        if (m % q != 0) return q;
    }
}

namespace {

// seq(n+1)^k < seq(1)*...*seq(n), decided in log space with an exact
// 128-bit fallback inside the guard band.
bool posa_inequality_holds(u64 next_term, u64 k_exp, long double log_sum, const u128* exact_product) {
    long double lhs = static_cast<long double>(k_exp) * std::log(static_cast<long double>(next_term));
    if (std::fabs(static_cast<double>(lhs - log_sum)) > 1e-6) return lhs < log_sum;
    if (exact_product) {
        u128 acc = 1;
        for (u64 i = 0; i < k_exp; ++i) {
            u128 next = acc * next_term;
            if (next / next_term != acc) return false; // power left 128 bits
            acc = next;
            if (acc >= *exact_product) return false;
        }
        return true;
    }
    return lhs < log_sum; // band is never hit once the product leaves 128 bits
}

} // namespace

u64 posa_threshold(u64 k_exp, const ap_class& cls, u64 n_bound) {
    if (k_exp < 1) throw validation_error("posa_threshold: k_exp >= 1 required");
    if (n_bound < 2) throw validation_error("posa_threshold: n_bound >= 2 required");
    class_prime_stream qs(cls);
    long double log_sum = 0.0L;
    u128 product = 1;
    bool product_ok = true;
    u64 last_fail = 0;
    u64 term = qs.next(); // seq(1)
    for (u64 n = 1; n <= n_bound; ++n) {
        log_sum += std::log(static_cast<long double>(term));
        if (product_ok) {
            u128 next = product * term;
            if (next / term != product)
                product_ok = false;
            else
                product = next;
        }
        u64 next_term = qs.next(); // seq(n+1)
        if (!posa_inequality_holds(next_term, k_exp, log_sum, product_ok ? &product : nullptr))
            last_fail = n;
        term = next_term;
    }
    return last_fail + 1;
}

threshold_report lemma2_min_constant(u64 k_exp, u64 scan_bound) {
    if (k_exp < 1) throw validation_error("lemma2_min_constant: k_exp >= 1 required");
    if (scan_bound < 2) throw validation_error("lemma2_min_constant: scan_bound >= 2 required");
    threshold_report rep;
    rep.k_exp = k_exp;
    rep.scan_bound = scan_bound;
    rep.scan_start = 1;
    for (u64 m = 1; m <= scan_bound; ++m) {
        u64 q = least_coprime_prime(m);
        if (!pow_less_than(q, k_exp, m)) rep.violations.push_back({m, m, q});
    }
    rep.empirical_constant = rep.violations.empty() ? 1 : rep.violations.back().key + 1;
    u64 n_k = posa_threshold(k_exp, ap_class::unconstrained(), 1000);
    if (n_k <= 15) rep.constructive_bound = primorial_exact(n_k);
    return rep;
}

namespace {

// Strict P < n^alpha over the reals; exact when alpha is a small integer.
bool below_real_power(u128 value, u64 n, double alpha) {
    if (alpha <= 0.0) return false;
    double ip;
    if (std::modf(alpha, &ip) == 0.0 && ip <= 64.0) {
        u128 acc = 1;
        for (u64 i = 0; i < static_cast<u64>(ip); ++i) {
            u128 next = acc * n;
            if (next / n != acc) return true; // n^alpha left 128 bits; value is below it
            acc = next;
            if (acc > value) return true; // powers of n >= 2 only grow
        }
        return value < acc;
    }
    long double lv = std::log(static_cast<long double>(value));
    return lv < static_cast<long double>(alpha) * std::log(static_cast<long double>(n));
}

} // namespace

threshold_report qpow_threshold_scan(u64 k_exp, double alpha, std::optional<double> epsilon,
                                     const ap_class& cls, u64 n_bound) {
    if (k_exp < 1) throw validation_error("qpow_threshold_scan: k_exp >= 1 required");
    if (n_bound < 4) throw validation_error("qpow_threshold_scan: n_bound >= 4 required");
    if (alpha < 0.0) throw validation_error("qpow_threshold_scan: alpha >= 0 required");
    if (epsilon && (*epsilon <= 0.0 || *epsilon >= 0.5))
        throw validation_error("qpow_threshold_scan: epsilon must lie in (0, 0.5)");
    if (alpha * std::log2(static_cast<double>(n_bound)) > 62.0)
        throw validation_error("qpow_threshold_scan: n_bound^alpha must fit in 64 bits");

    threshold_report rep;
    rep.k_exp = k_exp;
    rep.alpha = alpha;
    rep.epsilon = epsilon;
    rep.cls = cls;
    rep.scan_bound = n_bound;
    rep.scan_start = 2;

    // (class-)primorials; index j holds seq(1)*...*seq(j), entry 0 is 1.
    std::vector<u128> primorials{1};
    std::vector<u64> seq; // seq[j] = q of the j-th primorial's successor
    {
        class_prime_stream qs(cls);
        u128 acc = 1;
        for (;;) {
            u64 q = qs.next();
            seq.push_back(q);
            u128 next = acc * q;
            if (next / q != acc) break; // past 128 bits: no n in range reaches it
            acc = next;
            primorials.push_back(acc);
            if (!below_real_power(acc, n_bound, alpha)) break;
        }
    }

    long double ln2 = std::log(2.0L);
    for (u64 n = 2; n <= n_bound; ++n) {
        // worst m < n^alpha is the largest primorial below it
        std::size_t j = 0;
        while (j + 1 < primorials.size() && below_real_power(primorials[j + 1], n, alpha)) ++j;
        if (j == 0 && !below_real_power(1, n, alpha)) continue; // no admissible m at all
        u64 q = seq[j];
        bool holds;
        if (!epsilon) {
            holds = pow_less_than(q, k_exp, n);
        } else {
            long double e = *epsilon;
            long double lhs = ln2 / e + ((2.0L - e) / e) * std::log(static_cast<long double>(q));
            if (!cls.is_unconstrained())
                lhs += ((2.0L - e) / e) * std::log(static_cast<long double>(cls.modulus()));
            holds = lhs < std::log(static_cast<long double>(n));
        }
        if (!holds) rep.violations.push_back({n, static_cast<u64>(primorials[j]), q});
    }
    rep.empirical_constant = rep.violations.empty() ? rep.scan_start : rep.violations.back().key + 1;
    return rep;
}

std::vector<u64> euclid_generate(u64 count) {
    if (count < 1) throw validation_error("euclid_generate: count >= 1 required");
    std::vector<u64> out;
    out.reserve(count);
    out.push_back(2);
    while (out.size() < count) {
        for (u64 b = 2;; ++b) {
            bool coprime = true;
            for (u64 prev : out) {
                if (b % prev == 0) {
                    coprime = false;
                    break;
                }
            }
            if (coprime) {
                out.push_back(b);
                break;
            }
        }
    }
    return out;
}

coprime_scan_report coprime_existence_scan(u64 a_bound) {
    if (a_bound < 3) throw validation_error("coprime_existence_scan: a_bound >= 3 required");
    coprime_scan_report rep;
    rep.below_15_ok = true;
    rep.from_15_ok = true;
    for (u64 a = 3; a <= a_bound; ++a) {
        u64 witness = 0;
        for (u64 b = 2; b < a; ++b) {
            if (gcd_u64(a, b) == 1) {
                witness = b;
                break;
            }
        }
        if (witness == 0) {
            rep.violations.push_back(a);
            (a < 15 ? rep.below_15_ok : rep.from_15_ok) = false;
        }
        rep.per_a.push_back({a, witness});
    }
    return rep;
}

} // namespace aplab
