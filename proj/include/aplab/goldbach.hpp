#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "aplab/ap_class.hpp"
#include "aplab/least_prime.hpp"
#include "aplab/sieve.hpp"

namespace aplab {

struct goldbach_witness {
    u64 target = 0;
    u64 p = 0; // p < q, p + q = target, both prime, both in cls
    u64 q = 0;
    ap_class cls = ap_class::unconstrained();
};

enum class gb_mode { first, all };

// Distinct-prime decompositions of an even target >= 8, ascending by p.
// An empty result is a reportable research finding, not an error.
std::vector<goldbach_witness> goldbach_decompositions(u64 target, gb_mode mode);

// 2*(k*w + l), checked.
u64 ap_goldbach_target(const ap_class& cls, u64 w);

// Decompositions of 2(kw+l) into two distinct primes, both = l (mod k).
// The unconstrained class reduces to goldbach_decompositions.
std::vector<goldbach_witness> ap_goldbach_decompositions(const ap_class& cls, u64 w, gb_mode mode);

// Validates one witness from scratch (primality, distinctness, sum, class).
bool validate_goldbach_witness(const goldbach_witness& w);

struct conj2_witness {
    u64 n = 0;
    u64 p_r = 0;        // odd prime < n, gcd(p_r, n) = 1
    u64 difference = 0; // 2n - p_r
    bool fast_path = false;
};

// Smallest qualifying p_r such that 2n - p_r is coprime to 2n - p for every
// other odd prime p < n. Fast path: 2n - p_r prime certifies immediately;
// otherwise 2n - p_r is factored and each prime factor is scanned against
// the sibling progression. nullopt = counterexample (research finding).
// `shared` may hold a prime table with limit >= n to amortize scans.
std::optional<conj2_witness> conjecture2_witness(u64 n, const prime_table* shared = nullptr);

// Exhaustive-gcd re-validation of a claimed witness.
bool conj2_slow_verify(u64 n, u64 p_r);

struct conj2_record {
    u64 n = 0;
    u64 p_r = 0;
    u64 difference = 0;
    bool fast_path = false;
    verdict v = verdict::witness;
};

struct conj2_scan_report {
    std::vector<conj2_record> records;
    u64 fast_hits = 0;
    u64 counterexamples = 0;
};

conj2_scan_report conjecture2_scan(u64 n_from, u64 n_to);

struct conj3_witness {
    ap_class cls = ap_class::unconstrained();
    u64 n = 0;
    u64 q_r = 0;        // the distinguished class prime
    u64 index_r = 0;    // 1-based position in the Q-sequence (>= 2)
    u64 difference = 0; // 2(kn+l) - Q_r
};

enum class conj3_status { witness, no_witness, degenerate };

struct conj3_result {
    conj3_status status = conj3_status::degenerate;
    std::optional<conj3_witness> w;
};

// Q-sequence indexed from x = 0 (so Q_1 = l when l is prime). Candidates
// are class primes with index >= 2, below kn+l and coprime to it; the
// difference must be coprime to 2(kn+l) - Q for every class prime Q <= kn+l.
conj3_result conjecture3_witness(const ap_class& cls, u64 n);

// Smallest pair of distinct odd primes p < q < n with gcd(pq, n) = 1.
// Guaranteed for n > 6; throws aplab::error if that ever fails.
std::pair<u64, u64> lemma1_witness(u64 n);

// Two smallest distinct odd primes <= kn+l, coprime to kn+l, congruent to
// l (mod k) and to 2(kn+l) (mod p); found by CRT-merging the two
// congruences. nullopt when kn+l is too small to host a pair.
std::optional<std::pair<u64, u64>> lemma7_witness(const ap_class& cls, u64 p, u64 n);

struct bertrand_record {
    u64 x = 0;
    u64 g = 0;     // k*x + l
    u64 prime = 0; // class prime found in (g, 2g); 0 on violation
    verdict v = verdict::ok;
};

bertrand_record bertrand_ap_check_one(const ap_class& cls, u64 x);

// Violating x in [x_from, x_to] have no class prime in (g, 2g).
std::vector<bertrand_record> bertrand_ap_check(const ap_class& cls, u64 x_from, u64 x_to);

} // namespace aplab
