#pragma once

#include <optional>
#include <vector>

#include "aplab/ap_class.hpp"
#include "aplab/least_prime.hpp"
#include "aplab/sieve.hpp"

namespace aplab {

struct linear_form {
    u64 a = 1; // coefficient, >= 1
    u64 b = 0; // constant term
    bool operator==(const linear_form&) const = default;
};

struct linear_system {
    std::vector<linear_form> forms;
};

// Throws validation_error unless forms are nonempty, pairwise distinct and
// every coefficient is >= 1.
void validate_system(const linear_system& sys);

struct admissible_verdict {
    bool admissible = false;
    std::optional<u64> blocking_prime;          // the prime killing every residue
    std::optional<std::size_t> degenerate_index; // form with gcd(a, b) > 1
};

// Dickson criterion: admissible iff no prime divides prod f_i(x) for every x.
// Only primes p <= m can block a degenerate-free system, since m forms kill
// at most m < p residues mod p.
admissible_verdict admissible_check(const linear_system& sys);

struct f1f2_result {
    enum class status { found, exhausted, width_exceeded };
    status st = status::exhausted;
    std::vector<u64> permutation; // a_1..a_phi(n), a permutation of 1..phi(n)
    u64 phi = 0;
};

// First permutation (lexicographic) making both
//   F1 = { a_i x + b_i }  and  F2 = { a_i n x + b_i }
// admissible, where b_i runs over the coprimes of n. `exhausted` after a
// full search is a research finding, not an error.
f1f2_result f1f2_search(u64 n, u64 width_cap = 12);

struct matrix_report {
    u64 n = 0;
    u64 phi = 0;
    std::vector<char> rows_ok;
    std::vector<char> cols_ok;
    std::vector<u64> row_witness; // first prime per row, 0 if none
    std::vector<u64> col_witness;
    bool all_ok() const;
    std::optional<u64> first_missing_row() const; // 1-based
    std::optional<u64> first_missing_col() const;
};

// The phi(n) x phi(n) matrix with entries a_i + j*n over the coprimes a_i
// of n, 1 <= j <= phi(n); reports which rows/columns contain a prime.
matrix_report matrix_prime_check(u64 n);

struct conj4_record {
    ap_class cls = ap_class::unconstrained();
    u64 d = 0;
    u64 a = 0;
    double epsilon = 0.0;
    crt_class merged;
    u64 q = 0;            // least prime in the merged class; 0 if not found
    double bound = 0.0;   // (dk)^(2-epsilon)
    u64 search_cap = 0;   // 8x the bound
    bool within_bound = false;
    verdict v = verdict::undecided;
};

// Least prime q = a (mod d), q = l (mod k), searched to cap_multiplier times
// the conjectured bound. witness: q below the bound; violation: q found only
// above it; undecided: nothing up to the cap (absence is impossible by
// Dirichlet, so exhaustion never claims nonexistence).
conj4_record conjecture4_least_prime(const ap_class& cls, u64 d, u64 a, double epsilon,
                                     u64 cap_multiplier = 8);

// f_i(1) = a_i + b_i prime for every form.
bool standard_prime_map_check(const linear_system& sys);

// Least b < a with a + b prime (exists for a > 1 by Bertrand-Chebyshev).
u64 bertrand_witness_b(u64 a);

} // namespace aplab
