import math

import pytest

import aplab


def test_prime_basics():
    assert aplab.is_prime(2)
    assert not aplab.is_prime(1)
    assert aplab.is_prime(97)
    assert aplab.primes_in_range(10, 20) == [11, 13, 17, 19]
    assert aplab.prime_count(100) == 25
    assert aplab.primorial_exact(4) == 210
    with pytest.raises(OverflowError):
        aplab.primorial_exact(16)
    assert math.isclose(math.exp(aplab.primorial_log(4)), 210.0, rel_tol=1e-12)


def test_crt_and_coprimes():
    merged = aplab.crt_merge(aplab.CrtClass(2, 3), aplab.CrtClass(3, 5))
    assert (merged.residue, merged.modulus) == (8, 15)
    assert aplab.coprimes_of(10) == [1, 3, 7, 9]
    with pytest.raises(ValueError):
        aplab.crt_merge(aplab.CrtClass(1, 6), aplab.CrtClass(1, 4))


def test_least_primes():
    rec = aplab.least_prime_in_ap(aplab.APClass(3, 1), 100)
    assert rec.prime == 7
    pk = aplab.p_max(4)
    assert (pk.prime, pk.residue) == (5, 1)
    assert aplab.least_coprime_prime(30) == 7
    assert aplab.euclid_generate(5) == [2, 3, 5, 7, 11]
    rep = aplab.lemma2_min_constant(2, 10_000)
    assert rep.empirical_constant == 31
    assert aplab.posa_threshold(2, aplab.APClass.unconstrained(), 1000) == 4
    with pytest.raises(ValueError):
        aplab.APClass(4, 2)


def test_goldbach():
    ws = aplab.goldbach_decompositions(26)
    assert [(w.p, w.q) for w in ws] == [(3, 23), (7, 19)]
    cls = aplab.APClass(5, 2)
    ws = aplab.ap_goldbach_decompositions(cls, 10)  # target 104
    assert (7, 97) in [(w.p, w.q) for w in ws]
    w2 = aplab.conjecture2_witness(25)
    assert w2.p_r == 3 and w2.fast_path
    assert aplab.conj2_slow_verify(25, 3)
    r3 = aplab.conjecture3_witness(cls, 10)
    assert r3.status == aplab.Conj3Status.witness
    assert r3.witness.q_r == 7
    assert aplab.lemma1_witness(30) == (7, 11)


def test_linear_systems():
    assert aplab.admissible_check([(1, 1), (1, 3)]).admissible
    blocked = aplab.admissible_check([(1, 1), (1, 2)])
    assert not blocked.admissible and blocked.blocking_prime == 2
    r = aplab.f1f2_search(4)
    assert r.status == aplab.F1F2Status.found
    assert r.permutation == [1, 2]
    m = aplab.matrix_prime_check(4)
    assert m.all_ok() and m.row_witness == [5, 7]
    c4 = aplab.conjecture4_least_prime(aplab.APClass(4, 3), 5, 2, 0.1)
    assert c4.q == 7 and c4.within_bound
    assert aplab.standard_prime_map_check([(1, 1)])
    assert aplab.bertrand_witness_b(8) == 3
