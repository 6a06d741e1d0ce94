import random

import pytest
from fractions import Fraction
from hypothesis import given, settings, strategies as st

from logcoinv.qcomb import (eta_product_inv, partition_coeffs, qbin, qbin_coeffs,
                            qpochhammer_inv, qsupernomial, weighted_size)
from logcoinv.series import QPoly

from oracles import binomial, partitions_brute, qbin_by_division, supernomial_at_one


def test_qbin_examples():
    assert qbin(4, 2) == QPoly.from_qlist([1, 1, 2, 1, 1])
    for n in range(6):
        assert qbin(n, 0) == QPoly.one()
    assert qbin(Fraction(3, 2), 1) == QPoly.zero()
    assert qbin(-1, 0) == QPoly.zero()
    assert qbin(2, 3) == QPoly.zero()
    assert qbin(Fraction(4), 2) == qbin(4, 2)


def test_qbin_matches_division_oracle():
    for n in range(0, 13):
        for m in range(0, n + 1):
            assert list(qbin_coeffs(n, m)) == qbin_by_division(n, m)


def test_qbin_properties_on_500_random_instances():
    rng = random.Random(20261018)
    for _ in range(500):
        n = rng.randint(0, 30)
        m = rng.randint(0, n)
        c = qbin_coeffs(n, m)
        assert c == qbin_coeffs(n, n - m)
        assert sum(c) == binomial(n, m)
        assert len(c) - 1 == m * (n - m)
        assert all(x >= 0 for x in c)
        assert c == c[::-1]  # palindromic
        if 0 < m < n:
            a, b = qbin(n - 1, m - 1), qbin(n - 1, m).shift(m)
            assert qbin(n, m) == a + b


@settings(max_examples=500, deadline=None)
@given(st.integers(0, 25), st.integers(0, 25))
def test_qbin_pascal_hypothesis(n, m):
    if 0 < m < n:
        assert qbin(n, m) == qbin(n - 1, m - 1) + qbin(n - 1, m).shift(m)
    elif m > n:
        assert qbin(n, m) == QPoly.zero()


def test_qpochhammer_inv_examples():
    assert qpochhammer_inv(0, 4).flat == {(0, 0): 1}
    assert qpochhammer_inv(1, 4).flat == {(i, 0): 1 for i in range(4)}
    assert qpochhammer_inv(2, 4).flat == {(0, 0): 1, (1, 0): 1, (2, 0): 2, (3, 0): 2}
    # units of 1/8: q^4 is exponent 32
    s = qpochhammer_inv(2, 32, den=8)
    assert s.flat == {(0, 0): 1, (8, 0): 1, (16, 0): 2, (24, 0): 2}


def test_eta_product_inv_against_brute_partitions():
    s = eta_product_inv(31)
    for n in range(31):
        assert s.coeff(n).eval_one() == partitions_brute(n)
    assert [s.coeff(i).eval_one() for i in range(6)] == [1, 1, 2, 3, 5, 7]
    assert s.coeff(10).eval_one() == 42
    assert partition_coeffs(60)[59] == partitions_brute(59)


def test_supernomial_examples():
    assert qsupernomial((4,), 0) == qbin(4, 2)
    assert qsupernomial((1,), 1) == QPoly.one()
    for m in [(0,), (0, 0), (0, 0, 0)]:
        assert qsupernomial(m, 0) == QPoly.one()
        assert qsupernomial(m, 2) == QPoly.zero()


def test_supernomial_p2_is_gaussian_binomial():
    for n in range(8):
        for a2 in range(-n - 2, n + 3):
            want = qbin(n, Fraction(n + a2, 2))
            assert qsupernomial((n,), a2) == want


def test_supernomial_at_one_matches_weight_count():
    for m in [(2, 0), (1, 1), (0, 2), (2, 1), (1, 0, 1), (0, 1, 1), (2, 0, 1), (1, 1, 1)]:
        size = weighted_size(m)
        total = 0
        for a2 in range(-size - 1, size + 2):
            v = qsupernomial(m, a2).eval_one()
            assert v == supernomial_at_one(m, a2)
            total += v
        dim = 1
        for k, mk in enumerate(m, start=1):
            dim *= (k + 1) ** mk
        assert total == dim


def test_supernomial_symmetric_in_index():
    for m in [(3, 1), (2, 2), (1, 1, 1), (0, 2, 1)]:
        size = weighted_size(m)
        for a2 in range(-size, size + 1):
            assert qsupernomial(m, a2) == qsupernomial(m, -a2)


def test_qbin_rejects_non_rational():
    with pytest.raises(TypeError):
        qbin(1.5, 1)
