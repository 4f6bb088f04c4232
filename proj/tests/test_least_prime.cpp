#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "aplab/least_prime.hpp"
#include "oracles.hpp"

using namespace aplab;

TEST_CASE("ap_class invariants") {
    CHECK_THROWS_AS(ap_class(4, 2), validation_error);  // gcd > 1
    CHECK_THROWS_AS(ap_class(4, 0), validation_error);  // residue range
    CHECK_THROWS_AS(ap_class(4, 4), validation_error);
    CHECK_THROWS_AS(ap_class(1, 1), validation_error);  // sentinel is (1, 0)
    CHECK_THROWS_AS(ap_class(0, 0), validation_error);
    CHECK(ap_class::unconstrained().is_unconstrained());
    CHECK(ap_class::unconstrained().contains(5));
    CHECK(ap_class(10, 3).contains(3));
    CHECK_FALSE(ap_class(10, 3).contains(7));
}

TEST_CASE("least_prime_in_ap examples") {
    auto r = least_prime_in_ap(ap_class(2, 1), 100);
    REQUIRE(r);
    CHECK(r->prime == 3);

    r = least_prime_in_ap(ap_class(10, 3), 100);
    REQUIRE(r);
    CHECK(r->prime == 3); // the residue itself is prime

    r = least_prime_in_ap(ap_class(3, 1), 100);
    REQUIRE(r);
    CHECK(r->prime == 7); // 1 unit, 4 composite

    CHECK_FALSE(least_prime_in_ap(ap_class(31, 1), 60).has_value()); // 1, 32 miss
    CHECK(least_prime_in_ap(ap_class::unconstrained(), 100)->prime == 2);
    CHECK_THROWS_AS(least_prime_in_ap(ap_class(3, 1), 1), validation_error);
}

TEST_CASE("least_prime_in_ap is definitionally sound against the oracle") {
    for (u64 k = 2; k <= 60; ++k) {
        for (u64 l = 1; l < k; ++l) {
            if (gcd_u64(k, l) != 1) continue;
            auto mine = find_least_prime(ap_class(k, l));
            auto want = oracles::brute_least_prime_in_ap(k, l, 1'000'000);
            REQUIRE(mine);
            REQUIRE(want);
            if (mine->prime != *want) {
                CAPTURE(k);
                CAPTURE(l);
                REQUIRE(mine->prime == *want);
            }
            // no smaller member of the class is prime
            for (u64 v = l; v < mine->prime; v += k) REQUIRE_FALSE(oracles::trial_is_prime(v));
        }
    }
}

TEST_CASE("p_max examples and oracle consistency") {
    auto r = p_max(4);
    REQUIRE(r);
    CHECK(r->prime == 5);
    CHECK(r->residue == 1);

    r = p_max(3);
    REQUIRE(r);
    CHECK(r->prime == 7);
    CHECK(r->residue == 1);

    r = p_max(2);
    REQUIRE(r);
    CHECK(r->prime == 3);
    CHECK(r->residue == 1);

    CHECK_THROWS_AS(p_max(1), validation_error);

    for (u64 k = 2; k <= 500; ++k) {
        auto mine = p_max(k);
        auto want = oracles::brute_p_max(k, 10'000'000);
        REQUIRE(mine);
        REQUIRE(want);
        if (mine->prime != want->prime || mine->residue != want->residue) {
            CAPTURE(k);
            REQUIRE(mine->prime == want->prime);
            REQUIRE(mine->residue == want->residue);
        }
    }
}

TEST_CASE("kanold_scan examples") {
    auto recs = kanold_scan(2, 100);
    CHECK(recs.size() == 99);
    for (const auto& r : recs) {
        CHECK(r.v == verdict::ok);
        CHECK(u128(r.p_k) < u128(r.k) * r.k);
    }
    auto one = kanold_check(4);
    CHECK(one.p_k == 5);
    CHECK(one.v == verdict::ok);
    one = kanold_check(2);
    CHECK(one.p_k == 3);
    CHECK(one.v == verdict::ok);
}

TEST_CASE("chowla exponent scan profile") {
    auto rep = chowla_exponent_scan(2, 10);
    // p(5) = 19 at l = 4 dominates: candidates 4, 9, 14 are composite
    CHECK(rep.achieving_k == 5);
    CHECK(rep.max_exponent == doctest::Approx(1.829483).epsilon(1e-5));
    bool saw_k3 = false;
    for (const auto& r : rep.by_exponent) {
        if (r.k == 3) {
            saw_k3 = true;
            CHECK(r.p_k == 7);
            CHECK(r.exponent == doctest::Approx(1.771244).epsilon(1e-5));
        }
    }
    CHECK(saw_k3);
    // descending order
    for (std::size_t i = 1; i < rep.by_exponent.size(); ++i)
        CHECK(rep.by_exponent[i - 1].exponent >= rep.by_exponent[i].exponent);

    CHECK(chowla_check(4).exponent == doctest::Approx(1.160964).epsilon(1e-5));
    CHECK(chowla_check(2).exponent == doctest::Approx(1.584963).epsilon(1e-5));
}

TEST_CASE("least_coprime_prime examples and q(m) property") {
    CHECK(least_coprime_prime(1) == 2);
    CHECK(least_coprime_prime(30) == 7);
    CHECK(least_coprime_prime(15) == 2);
    CHECK_THROWS_AS(least_coprime_prime(0), validation_error);

    for (u64 m = 1; m <= 100'000; ++m) {
        u64 q = least_coprime_prime(m);
        REQUIRE(gcd_u64(q, m) == 1);
        // every prime below q divides m
        for (u64 p : {u64{2}, u64{3}, u64{5}, u64{7}, u64{11}, u64{13}, u64{17}, u64{19},
                      u64{23}, u64{29}, u64{31}, u64{37}, u64{41}, u64{43}, u64{47}}) {
            if (p >= q) break;
            REQUIRE(m % p == 0);
        }
    }
}

TEST_CASE("least_ap_coprime_prime examples and the unconstrained specialization") {
    auto q = least_ap_coprime_prime(ap_class(4, 3), 21, 1000);
    REQUIRE(q);
    CHECK(*q == 11);

    q = least_ap_coprime_prime(ap_class(4, 3), 1, 1000);
    REQUIRE(q);
    CHECK(*q == 3);

    q = least_ap_coprime_prime(ap_class(5, 2), 14, 1000);
    REQUIRE(q);
    CHECK(*q == 17);

    CHECK_FALSE(least_ap_coprime_prime(ap_class(5, 2), 14, 10).has_value());

    for (u64 m = 1; m <= 10'000; ++m) {
        auto mine = least_ap_coprime_prime(ap_class::unconstrained(), m, 1000);
        REQUIRE(mine);
        REQUIRE(*mine == least_coprime_prime(m));
    }
}

TEST_CASE("lemma2_min_constant frozen values") {
    auto rep = lemma2_min_constant(1, 10'000);
    CHECK(rep.empirical_constant == 3);
    REQUIRE(rep.violations.size() == 2);
    CHECK(rep.violations[0].key == 1);
    CHECK(rep.violations[1].key == 2);

    rep = lemma2_min_constant(2, 10'000);
    CHECK(rep.empirical_constant == 31);
    std::vector<u64> keys;
    for (const auto& v : rep.violations) keys.push_back(v.key);
    CHECK(keys == std::vector<u64>{1, 2, 3, 4, 6, 8, 12, 18, 24, 30});
    CHECK(rep.violations.back().q == 7); // q(30) = 7, 49 > 30
    REQUIRE(rep.constructive_bound);
    CHECK(*rep.constructive_bound == 210); // primorial at the k=2 threshold

    rep = lemma2_min_constant(1, 2);
    CHECK(rep.empirical_constant == 3);
    CHECK(rep.violations.size() == 2);
}

TEST_CASE("lemma2 threshold is monotone against the brute oracle") {
    auto rep = lemma2_min_constant(3, 5000);
    for (u64 m = 1; m <= 5000; ++m) {
        u64 q = oracles::brute_least_coprime_prime(m);
        bool holds = u128(q) * q * q < m;
        bool in_violations = false;
        for (const auto& v : rep.violations) in_violations |= v.key == m;
        REQUIRE(holds == !in_violations);
        if (m >= rep.empirical_constant) REQUIRE(holds);
    }
    REQUIRE(rep.empirical_constant >= 2);
    u64 b = rep.empirical_constant - 1;
    u64 qb = oracles::brute_least_coprime_prime(b);
    CHECK_FALSE(u128(qb) * qb * qb < b);
}

TEST_CASE("posa_threshold frozen values") {
    CHECK(posa_threshold(2, ap_class::unconstrained(), 1000) == 4);
    CHECK(posa_threshold(1, ap_class::unconstrained(), 1000) == 2);
    // Q-sequence 2, 7, 17, 37, 47, ... for the class 2 mod 5
    CHECK(posa_threshold(2, ap_class(5, 2), 1000) == 4);
    CHECK(posa_threshold(3, ap_class(4, 3), 500) == 5);
    CHECK_THROWS_AS(posa_threshold(0, ap_class::unconstrained(), 10), validation_error);
    CHECK_THROWS_AS(posa_threshold(2, ap_class::unconstrained(), 1), validation_error);
}

TEST_CASE("posa_threshold against an exact 128-bit oracle while products fit") {
    auto flags = oracles::plain_sieve(10'000);
    std::vector<u64> seq;
    for (u64 v = 2; v < flags.size(); ++v)
        if (flags[v]) seq.push_back(v);
    for (u64 k_exp : {u64{1}, u64{2}, u64{3}, u64{5}}) {
        u64 last_fail = 0;
        u128 prod = 1;
        for (u64 n = 1; n <= 20; ++n) {
            prod *= seq[n - 1];
            u128 pw = 1;
            bool ge = false;
            for (u64 i = 0; i < k_exp; ++i) {
                pw *= seq[n];
                if (pw >= prod) {
                    ge = true;
                    break;
                }
            }
            if (ge) last_fail = n;
        }
        u64 lib = posa_threshold(k_exp, ap_class::unconstrained(), 1000);
        if (lib <= 20) CHECK(lib == last_fail + 1);
    }
}

TEST_CASE("qpow_threshold_scan frozen values") {
    auto rep = qpow_threshold_scan(1, 1.0, std::nullopt, ap_class::unconstrained(), 1000);
    CHECK(rep.empirical_constant == 4);
    REQUIRE(rep.violations.size() == 2);
    CHECK(rep.violations[0].key == 2); // m = 1, q = 2
    CHECK(rep.violations[1].key == 3); // m = 2, q = 3
    CHECK(rep.violations[1].q == 3);

    rep = qpow_threshold_scan(2, 1.0, std::nullopt, ap_class::unconstrained(), 1000);
    CHECK(rep.empirical_constant == 50);
    CHECK(rep.violations.size() == 43); // n in [2,25] and [31,49]
    CHECK(rep.violations.back().key == 49);
    CHECK(rep.violations.back().m == 30);
    CHECK(rep.violations.back().q == 7);

    rep = qpow_threshold_scan(2, 0.0, std::nullopt, ap_class::unconstrained(), 1000);
    CHECK(rep.empirical_constant == 2); // no m < 1 exists: vacuous from the start
    CHECK(rep.violations.empty());
}

TEST_CASE("qpow epsilon form matches a direct evaluation") {
    double eps = 0.25;
    auto rep = qpow_threshold_scan(1, 1.5, eps, ap_class::unconstrained(), 5000);
    auto q_of = [](u64 m) { return oracles::brute_least_coprime_prime(m); };
    u64 last_fail = 0;
    for (u64 n = 2; n <= 5000; ++n) {
        double x = std::pow(static_cast<double>(n), 1.5);
        u64 best_m = 0;
        for (u64 p : {u64{1}, u64{2}, u64{6}, u64{30}, u64{210}, u64{2310}, u64{30030},
                      u64{510510}})
            if (static_cast<double>(p) < x) best_m = p;
        if (best_m == 0) continue;
        double lhs = std::pow(2.0, 1.0 / eps) *
                     std::pow(static_cast<double>(q_of(best_m)), (2.0 - eps) / eps);
        if (!(lhs < static_cast<double>(n))) last_fail = n;
    }
    CHECK(rep.empirical_constant == last_fail + 1);
}

TEST_CASE("worst q(m) at equal size is primorial-divisible (sampled)") {
    std::mt19937_64 rng(424242);
    const u64 primorials[] = {1, 2, 6, 30, 210, 2310, 30030, 510510, 9699690};
    for (int i = 0; i < 10'000; ++i) {
        u64 m = rng() % 1'000'000 + 1;
        u64 q = least_coprime_prime(m);
        u64 best = 1;
        for (u64 p : primorials)
            if (p <= m) best = p;
        REQUIRE(q <= least_coprime_prime(best));
    }
}

TEST_CASE("euclid_generate equals the sieve primes") {
    CHECK(euclid_generate(5) == std::vector<u64>{2, 3, 5, 7, 11});
    CHECK(euclid_generate(1) == std::vector<u64>{2});
    CHECK(euclid_generate(10) == std::vector<u64>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
    CHECK_THROWS_AS(euclid_generate(0), validation_error);

    auto seq = euclid_generate(1000);
    prime_stream ps;
    for (u64 i = 0; i < 1000; ++i) {
        u64 want = ps.next();
        if (seq[i] != want) {
            CAPTURE(i);
            REQUIRE(seq[i] == want);
        }
    }
}

TEST_CASE("coprime_existence_scan examples and absence of violations") {
    auto rep = coprime_existence_scan(10'000);
    CHECK(rep.violations.empty());
    CHECK(rep.below_15_ok);
    CHECK(rep.from_15_ok);
    REQUIRE(rep.per_a.size() == 9998);
    CHECK(rep.per_a[0].a == 3);
    CHECK(rep.per_a[0].witness == 2);
    CHECK(rep.per_a[1].a == 4);
    CHECK(rep.per_a[1].witness == 3);
    CHECK(rep.per_a[3].a == 6);
    CHECK(rep.per_a[3].witness == 5);
    for (const auto& e : rep.per_a) {
        REQUIRE(e.witness > 1);
        REQUIRE(e.witness < e.a);
        REQUIRE(gcd_u64(e.witness, e.a) == 1);
        for (u64 b = 2; b < e.witness; ++b) REQUIRE(gcd_u64(b, e.a) != 1);
    }
    CHECK_THROWS_AS(coprime_existence_scan(2), validation_error);
}

TEST_CASE("euler_phi agrees with the multiplicative formula") {
    for (u64 n = 1; n <= 5000; ++n) CHECK(euler_phi(n) == oracles::totient_formula(n));
}
