#pragma once

#include <optional>
#include <vector>

#include "aplab/ap_class.hpp"
#include "aplab/sieve.hpp"

namespace aplab {

// Hard cap for every least-prime search; "not found below this" is reported
// as undecided, never as nonexistence.
inline constexpr u64 kLeastPrimeHardCap = u64{1} << 42;

inline u64 default_search_bound(u64 k) {
    u64 kk = (k < (u64{1} << 32)) ? k * k : kLeastPrimeHardCap;
    return std::max<u64>(kk, 1'000'000);
}

struct least_prime_record {
    ap_class cls;
    u64 prime = 0;
    u64 candidates_tested = 0;
    u64 bound_used = 0;
};

// Least prime = l (mod k) not exceeding `bound`, enumerating l, l+k, l+2k, ...
std::optional<least_prime_record> least_prime_in_ap(const ap_class& cls, u64 bound);

// Same, with the default doubling bound policy up to the hard cap.
std::optional<least_prime_record> find_least_prime(const ap_class& cls);

struct p_max_record {
    u64 k = 0;
    u64 prime = 0;   // p(k)
    u64 residue = 0; // the l achieving it
    u64 primes_scanned = 0;
    u64 bound_used = 0;
};

// p(k): streams primes, marking residue classes until all phi(k) reduced
// classes are covered; the last class covered yields p(k) and its l.
std::optional<p_max_record> p_max(u64 k, u64 hard_cap = kLeastPrimeHardCap);

enum class verdict {
    ok,
    violation,
    counterexample,
    undecided,
    witness,
    degenerate,
};

const char* verdict_name(verdict v);

struct kanold_record {
    u64 k = 0;
    u64 p_k = 0;
    u64 residue = 0;
    u64 bound_used = 0;
    verdict v = verdict::ok;
};

// Checks p(k) < k^2 for one k.
kanold_record kanold_check(u64 k);
std::vector<kanold_record> kanold_scan(u64 k_from, u64 k_to);

struct chowla_record {
    u64 k = 0;
    u64 p_k = 0;
    u64 residue = 0;
    double exponent = 0.0; // log p(k) / log k
    verdict v = verdict::ok;
};

struct chowla_report {
    std::vector<chowla_record> by_exponent; // descending
    double max_exponent = 0.0;
    u64 achieving_k = 0;
};

chowla_record chowla_check(u64 k);
chowla_report chowla_exponent_scan(u64 k_from, u64 k_to);

// q(m): the least prime coprime to m, i.e. the smallest prime not dividing m.
u64 least_coprime_prime(u64 m);

// Q(m): least prime of the class coprime to m, searched up to `bound`.
std::optional<u64> least_ap_coprime_prime(const ap_class& cls, u64 m, u64 bound);

struct threshold_violation {
    u64 key = 0; // the scanned variable (m or n)
    u64 m = 0;   // witness integer (equals key for the m-scans)
    u64 q = 0;   // q(m) or Q(m) behind the failure
};

struct threshold_report {
    u64 k_exp = 1;
    double alpha = 0.0;                // 0 when not applicable
    std::optional<double> epsilon;
    ap_class cls = ap_class::unconstrained();
    u64 scan_bound = 0;
    u64 scan_start = 1;
    u64 empirical_constant = 0; // inequality holds on [constant, scan_bound]
    std::vector<threshold_violation> violations;
    std::optional<u64> constructive_bound; // primorial-built constant, when representable
};

// Least C with (q(m))^k_exp < m for every C <= m <= scan_bound.
threshold_report lemma2_min_constant(u64 k_exp, u64 scan_bound);

// Least n_k such that seq(n+1)^k_exp < seq(1)*...*seq(n) for all n in
// [n_k, n_bound]; seq is the primes (unconstrained) or the class primes.
u64 posa_threshold(u64 k_exp, const ap_class& cls, u64 n_bound);

// Least C such that for every n in [C, n_bound] and every positive m < n^alpha:
//   without epsilon:  (q(m))^k_exp < n
//   with epsilon e:   2^(1/e) * (q(m))^((2-e)/e) * [k^((2-e)/e) if constrained] < n
// where q is Q of the class when constrained. Worst m per n is the largest
// (class-)primorial below n^alpha.
threshold_report qpow_threshold_scan(u64 k_exp, double alpha, std::optional<double> epsilon,
                                     const ap_class& cls, u64 n_bound);

// Prime generation by repeated "least integer > 1 coprime to everything so
// far"; the previous outputs are kept as a divisor set, never multiplied out.
std::vector<u64> euclid_generate(u64 count);

struct coprime_scan_report {
    struct entry {
        u64 a = 0;
        u64 witness = 0; // least 1 < b < a with gcd(a, b) = 1
    };
    std::vector<entry> per_a;    // a = 3 .. a_bound
    std::vector<u64> violations; // a with no witness (expected empty)
    bool below_15_ok = false;    // the directly-tested 2 < a < 15 range
    bool from_15_ok = false;     // the a >= 15 range
};

coprime_scan_report coprime_existence_scan(u64 a_bound);

// phi(n) by factorization (used where enumerating coprimes_of would be wasteful).
u64 euler_phi(u64 n);

} // namespace aplab
