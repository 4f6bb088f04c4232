#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace aplab {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// Base class for everything this library throws.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Bad input: a precondition the caller is responsible for. CLI exit code 2.
class validation_error : public error {
public:
    explicit validation_error(const std::string& what) : error(what) {}
};

// 64-bit arithmetic would wrap. Never silently tolerated. CLI exit code 3.
class overflow_error : public error {
public:
    explicit overflow_error(const std::string& what) : error(what) {}
};

class non_coprime_error : public validation_error {
public:
    explicit non_coprime_error(const std::string& what) : validation_error(what) {}
};

class checkpoint_error : public validation_error {
public:
    explicit checkpoint_error(const std::string& what) : validation_error(what) {}
};

inline u64 checked_add(u64 a, u64 b) {
    u64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw overflow_error("u64 addition overflow: " + std::to_string(a) + " + " + std::to_string(b));
    return r;
}

inline u64 checked_mul(u64 a, u64 b) {
    u64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw overflow_error("u64 multiplication overflow: " + std::to_string(a) + " * " + std::to_string(b));
    return r;
}

inline u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }

// Decides base^exp < limit exactly, without overflow.
inline bool pow_less_than(u64 base, u64 exp, u64 limit) {
    if (limit == 0) return false;
    if (base == 0) return true; // 0^e = 0 (< limit) for e >= 1; exp 0 handled below
    if (exp == 0) return 1 < limit;
    u128 acc = 1;
    for (u64 i = 0; i < exp; ++i) {
        acc *= base;
        if (acc >= limit) return false;
    }
    return true;
}

} // namespace aplab
