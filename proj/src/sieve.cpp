#include "aplab/sieve.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <utility>

namespace aplab {

namespace {

u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((u128(a) * b) % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// One strong-probable-prime round. n odd > 2, n-1 = d * 2^s.
bool sprp(u64 n, u64 a, u64 d, int s) {
    a %= n;
    if (a == 0) return true;
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// Plain sieve of the odds in [0, limit]; bit i = 2i+1 prime.
std::vector<u64> sieve_odd_flags(u64 limit) {
    u64 nbits = limit / 2 + 1;
    std::vector<u64> flags((nbits + 63) / 64, ~u64{0});
    auto clear = [&flags](u64 idx) { flags[idx >> 6] &= ~(u64{1} << (idx & 63)); };
    clear(0); // 1 is not prime
    for (u64 p = 3; p * p <= limit; p += 2) {
        if ((flags[(p >> 1) >> 6] >> ((p >> 1) & 63)) & 1) {
            for (u64 c = p * p; c <= limit; c += 2 * p) clear(c >> 1);
        }
    }
    // mask tail bits past `limit`
    u64 used = nbits % 64;
    if (used) flags.back() &= (~u64{0}) >> (64 - used);
    return flags;
}

} // namespace

bool is_prime(u64 v) {
    if (v < 2) return false;
    for (u64 p : {u64{2}, u64{3}, u64{5}, u64{7}, u64{11}, u64{13}, u64{17},
                  u64{19}, u64{23}, u64{29}, u64{31}, u64{37}}) {
        if (v == p) return true;
        if (v % p == 0) return false;
    }
    u64 d = v - 1;
    int s = std::countr_zero(d);
    d >>= s;
    auto test = [&](std::initializer_list<u64> bases) {
        for (u64 a : bases)
            if (!sprp(v, a, d, s)) return false;
        return true;
    };
    // Proven deterministic base sets by range.
    if (v < 2047) return test({2});
    if (v < 1373653) return test({2, 3});
    if (v < 9080191) return test({31, 73});
    if (v < 25326001) return test({2, 3, 5});
    if (v < 3215031751ULL) return test({2, 3, 5, 7});
    if (v < 4759123141ULL) return test({2, 7, 61});
    if (v < 1122004669633ULL) return test({2, 13, 23, 1662803});
    if (v < 2152302898747ULL) return test({2, 3, 5, 7, 11});
    if (v < 3474749660383ULL) return test({2, 3, 5, 7, 11, 13});
    if (v < 341550071728321ULL) return test({2, 3, 5, 7, 11, 13, 17});
    return test({2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37});
}

prime_table::prime_table(u64 limit, u64 segment_flags)
    : limit_(limit), segment_flags_(segment_flags ? segment_flags : kDefaultSegmentFlags) {
    if (limit_ < 2) limit_ = 2;
    u64 nbits = limit_ / 2 + 1;
    flags_.assign((nbits + 63) / 64, ~u64{0});
    auto clear = [this](u64 idx) { flags_[idx >> 6] &= ~(u64{1} << (idx & 63)); };
    clear(0);

    u64 root = static_cast<u64>(std::sqrt(static_cast<double>(limit_)));
    while (u128(root + 1) * (root + 1) <= limit_) ++root;
    std::vector<u64> base;
    {
        auto small = sieve_odd_flags(std::max<u64>(root, 3));
        for (u64 p = 3; p <= root; p += 2)
            if ((small[(p >> 1) >> 6] >> ((p >> 1) & 63)) & 1) base.push_back(p);
    }

    // Segmented crossing-off over odd values, segment_flags_ odd slots at a time.
    u64 span = segment_flags_ * 2;
    for (u64 lo = 3; lo <= limit_; lo += span) {
        u64 hi = std::min(limit_, lo + span - 1);
        for (u64 p : base) {
            if (p * p > hi) break;
            u64 c = std::max(p * p, ((lo + p - 1) / p) * p);
            if (c % 2 == 0) c += p;
            for (; c <= hi; c += 2 * p) clear(c >> 1);
        }
    }
    u64 used = nbits % 64;
    if (used) flags_.back() &= (~u64{0}) >> (64 - used);
}

bool prime_table::contains(u64 v) const {
    if (v > limit_) throw validation_error("prime_table::contains past limit");
    if (v == 2) return true;
    if (v < 2 || v % 2 == 0) return false;
    return odd_bit(v);
}

std::vector<u64> prime_table::primes(u64 lo, u64 hi) const {
    std::vector<u64> out;
    for_each_prime(lo, hi, [&out](u64 p) {
        out.push_back(p);
        return true;
    });
    return out;
}

u64 prime_table::count(u64 x) const {
    if (x > limit_) throw validation_error("prime_table::count past limit");
    if (x < 2) return 0;
    u64 n = 1;                 // the prime 2
    u64 nbits = (x + 1) / 2;   // odd slots for the odd values <= x
    u64 full = nbits / 64;
    for (u64 w = 0; w < full; ++w) n += std::popcount(flags_[w]);
    u64 rest = nbits % 64;
    if (rest) n += std::popcount(flags_[full] & ((~u64{0}) >> (64 - rest)));
    return n;
}

prime_stream::prime_stream(u64 start, u64 segment_span)
    : segment_span_(std::max<u64>(segment_span, 64)),
      lo_(0),
      base_limit_(0),
      cursor_(0),
      start_(start) {
    lo_ = (start <= 3) ? 3 : (start | 1);
    fill_segment();
}

void prime_stream::fill_segment() {
    // slot i represents the odd value lo_ + 2i
    u64 hi = lo_ + 2 * (segment_span_ - 1);
    if (hi < lo_) throw overflow_error("prime_stream segment past 2^64");
    u64 root = static_cast<u64>(std::sqrt(static_cast<double>(hi))) + 2;
    if (root > base_limit_) {
        base_limit_ = std::max<u64>(root * 2, 4096);
        base_.clear();
        auto small = sieve_odd_flags(base_limit_);
        for (u64 p = 3; p <= base_limit_; p += 2)
            if ((small[(p >> 1) >> 6] >> ((p >> 1) & 63)) & 1) base_.push_back(p);
    }
    composite_.assign(segment_span_, false);
    for (u64 p : base_) {
        if (p > root) break;
        u64 c = std::max(p * p, ((lo_ + p - 1) / p) * p);
        if (c % 2 == 0) c += p;
        for (; c <= hi; c += 2 * p) composite_[(c - lo_) >> 1] = true;
    }
    cursor_ = 0;
}

u64 prime_stream::next() {
    if (!emitted_two_) {
        emitted_two_ = true;
        if (start_ <= 2) return 2;
    }
    for (;;) {
        while (cursor_ < segment_span_) {
            u64 i = cursor_++;
            if (!composite_[i]) return lo_ + 2 * i;
        }
        lo_ += segment_span_ * 2;
        fill_segment();
    }
}

std::vector<u64> primes_in_range(u64 lo, u64 hi, u64 ceiling) {
    if (lo > hi) throw validation_error("primes_in_range: lo > hi");
    if (hi > ceiling) throw validation_error("primes_in_range: hi exceeds sieve ceiling");
    std::vector<u64> out;
    prime_stream ps(std::max<u64>(lo, 2));
    for (;;) {
        u64 p = ps.next();
        if (p > hi) break;
        out.push_back(p);
    }
    return out;
}

u64 prime_count(u64 x) {
    if (x < 2) return 0;
    u64 n = 0;
    prime_stream ps;
    for (;;) {
        u64 p = ps.next();
        if (p > x) break;
        ++n;
    }
    return n;
}

double primorial_log(u64 n) {
    if (n < 1) throw validation_error("primorial_log: n >= 1 required");
    double acc = 0.0;
    prime_stream ps;
    for (u64 i = 0; i < n; ++i) acc += std::log(static_cast<double>(ps.next()));
    return acc;
}

u64 primorial_exact(u64 n) {
    if (n < 1) throw validation_error("primorial_exact: n >= 1 required");
    u64 acc = 1;
    prime_stream ps;
    for (u64 i = 0; i < n; ++i) acc = checked_mul(acc, ps.next());
    return acc;
}

crt_class::crt_class(u64 r, u64 m) : residue(r), modulus(m) {
    if (m < 1) throw validation_error("crt_class: modulus >= 1 required");
    if (r >= m) throw validation_error("crt_class: residue must be canonical (< modulus)");
}

crt_class crt_merge(const crt_class& c1, const crt_class& c2) {
    u64 m1 = c1.modulus, m2 = c2.modulus;
    if (gcd_u64(m1, m2) != 1)
        throw non_coprime_error("crt_merge: moduli " + std::to_string(m1) + " and " +
                                std::to_string(m2) + " share a factor");
    u64 m = checked_mul(m1, m2);
    // r = r1 + m1 * ((r2 - r1) * m1^{-1} mod m2)
    u64 m1_mod = m1 % m2;
    // inverse via extended euclid on (m1_mod, m2); m2 == 1 means identity
    if (m2 == 1) return crt_class(c1.residue, m);
    i64 t = 0, newt = 1;
    i64 r = static_cast<i64>(m2), newr = static_cast<i64>(m1_mod);
    while (newr != 0) {
        i64 q = r / newr;
        t = std::exchange(newt, t - q * newt);
        r = std::exchange(newr, r - q * newr);
    }
    u64 inv = static_cast<u64>(t < 0 ? t + static_cast<i64>(m2) : t);
    u64 diff = (c2.residue + m2 - (c1.residue % m2)) % m2;
    u64 k = mul_mod(diff, inv, m2);
    u64 res = static_cast<u64>((u128(m1) * k + c1.residue) % m);
    return crt_class(res, m);
}

std::vector<u64> coprimes_of(u64 n) {
    if (n < 1) throw validation_error("coprimes_of: n >= 1 required");
    std::vector<u64> out;
    for (u64 v = 1; v <= n; ++v)
        if (gcd_u64(v, n) == 1) out.push_back(v);
    return out;
}

} // namespace aplab
