#pragma once

#include <optional>
#include <vector>

#include "aplab/common.hpp"

namespace aplab {

// Largest value primes_in_range will sieve to unless told otherwise.
inline constexpr u64 kDefaultSieveCeiling = u64{1} << 42;
inline constexpr u64 kDefaultSegmentFlags = u64{1} << 18;

// Deterministic primality for the full 64-bit range (Miller-Rabin with
// proven base sets below the published thresholds).
bool is_prime(u64 v);

// Immutable table of primality flags for odd numbers up to `limit`,
// built with a segmented sieve. Shareable across threads once built.
class prime_table {
public:
    explicit prime_table(u64 limit, u64 segment_flags = kDefaultSegmentFlags);

    u64 limit() const { return limit_; }

    // pre: v <= limit()
    bool contains(u64 v) const;

    // Visits primes in [lo, min(hi, limit)] ascending. fn returns false to stop.
    template <typename Fn>
    void for_each_prime(u64 lo, u64 hi, Fn&& fn) const {
        if (hi > limit_) hi = limit_;
        if (lo > hi) return;
        if (lo <= 2 && 2 <= hi) {
            if (!fn(u64{2})) return;
        }
        u64 v = lo | 1;
        if (v < 3) v = 3;
        for (; v <= hi; v += 2) {
            if (odd_bit(v) && !fn(v)) return;
        }
    }

    std::vector<u64> primes(u64 lo, u64 hi) const;

    // pi(x) for x <= limit().
    u64 count(u64 x) const;

private:
    bool odd_bit(u64 v) const { // pre: v odd
        u64 idx = v >> 1;
        return (flags_[idx >> 6] >> (idx & 63)) & 1;
    }
    u64 limit_;
    u64 segment_flags_;
    std::vector<u64> flags_; // bit i = primality of 2i+1
};

// Unbounded ascending stream of primes starting at `start`. Grows its own
// base-prime list as segments advance; each instance is independent, so
// parallel scans can own one each.
class prime_stream {
public:
    explicit prime_stream(u64 start = 2, u64 segment_span = u64{1} << 20);
    u64 next(); // throws overflow_error past 2^63 (never at desk scale)

private:
    void fill_segment();
    u64 segment_span_;
    u64 lo_;                     // inclusive start of current segment
    std::vector<u64> base_;      // primes used for crossing off
    u64 base_limit_;
    std::vector<bool> composite_;
    u64 cursor_;                 // index into current segment
    bool emitted_two_ = false;
    u64 start_;
};

// Exactly the primes p with lo <= p <= hi, ascending.
// Throws validation_error if lo > hi or hi exceeds `ceiling`.
std::vector<u64> primes_in_range(u64 lo, u64 hi, u64 ceiling = kDefaultSieveCeiling);

// pi(x), counted by segmented sieve.
u64 prime_count(u64 x);

// Natural log of the product of the first n primes.
double primorial_log(u64 n);

// Product of the first n primes; throws overflow_error once the product
// leaves the 64-bit range (first 15 primes are the last representable case).
u64 primorial_exact(u64 n);

struct crt_class {
    u64 residue = 0;
    u64 modulus = 1; // >= 1; residue < modulus

    crt_class() = default;
    crt_class(u64 r, u64 m);
};

// Unique class mod m1*m2 matching both inputs. Throws non_coprime_error
// if gcd(m1, m2) != 1 and overflow_error if m1*m2 exceeds 64 bits.
crt_class crt_merge(const crt_class& c1, const crt_class& c2);

// The phi(n) integers in [1, n] coprime to n, ascending.
std::vector<u64> coprimes_of(u64 n);

} // namespace aplab
