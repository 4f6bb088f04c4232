// Independent brute-force oracles. Everything here is deliberately naive and
// shares no code with the library paths it checks.
#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace oracles {

using u64 = std::uint64_t;

inline bool trial_is_prime(u64 v) {
    if (v < 2) return false;
    if (v % 2 == 0) return v == 2;
    for (u64 d = 3; d * d <= v; d += 2)
        if (v % d == 0) return false;
    return true;
}

// Classic non-segmented sieve; flags[i] == value i is prime.
inline std::vector<bool> plain_sieve(u64 limit) {
    std::vector<bool> f(limit + 1, true);
    f[0] = false;
    if (limit >= 1) f[1] = false;
    for (u64 p = 2; p * p <= limit; ++p)
        if (f[p])
            for (u64 c = p * p; c <= limit; c += p) f[c] = false;
    return f;
}

inline std::optional<u64> brute_least_prime_in_ap(u64 k, u64 l, u64 bound) {
    for (u64 v = l; v <= bound; v += k)
        if (trial_is_prime(v)) return v;
    return std::nullopt;
}

struct brute_pmax_result {
    u64 prime = 0;
    u64 residue = 0;
};

inline std::optional<brute_pmax_result> brute_p_max(u64 k, u64 bound) {
    brute_pmax_result best;
    for (u64 l = 1; l < k; ++l) {
        if (std::gcd(k, l) != 1) continue;
        auto p = brute_least_prime_in_ap(k, l, bound);
        if (!p) return std::nullopt;
        if (*p > best.prime) best = {*p, l};
    }
    return best;
}

inline u64 brute_least_coprime_prime(u64 m) {
    for (u64 v = 2;; ++v)
        if (trial_is_prime(v) && std::gcd(v, m) == 1) return v;
}

inline u64 totient_formula(u64 n) {
    u64 result = n, rest = n;
    for (u64 d = 2; d * d <= rest; ++d) {
        if (rest % d == 0) {
            result = result / d * (d - 1);
            while (rest % d == 0) rest /= d;
        }
    }
    if (rest > 1) result = result / rest * (rest - 1);
    return result;
}

// Dickson admissibility by exhaustion: try every prime p up to
// max(m, coefficients, constants) and every residue.
struct brute_form {
    u64 a, b;
};

inline bool brute_admissible(const std::vector<brute_form>& forms) {
    u64 top = forms.size();
    for (const auto& f : forms) {
        top = std::max(top, f.a);
        top = std::max(top, f.b);
    }
    for (u64 p = 2; p <= top; ++p) {
        if (!trial_is_prime(p)) continue;
        bool blocked = true;
        for (u64 x = 0; x < p && blocked; ++x) {
            bool all_nonzero = true;
            for (const auto& f : forms)
                if ((f.a * x + f.b) % p == 0) {
                    all_nonzero = false;
                    break;
                }
            if (all_nonzero) blocked = false;
        }
        if (blocked) return false;
    }
    return true;
}

inline std::vector<std::pair<u64, u64>> brute_goldbach(u64 target) {
    std::vector<std::pair<u64, u64>> out;
    for (u64 p = 2; p < target - p; ++p)
        if (trial_is_prime(p) && trial_is_prime(target - p)) out.emplace_back(p, target - p);
    return out;
}

} // namespace oracles
