import itertools

import pytest

from logcoinv.errors import ParameterError
from logcoinv.fusion import decompose_power, obj
from logcoinv.kostka import (kbar, khat, khat_felder, khat_p_super, khat_s_super,
                             khat_steinberg, kostka_level_restricted,
                             supernomial_identity_sides)
from logcoinv.model import build_model
from logcoinv.series import QPoly


def poly(den, terms):
    return QPoly(terms, den)


def vectors(p, max_weight):
    # all n with weighted size sum (j-1) n_j <= max_weight
    ranges = [range(max_weight // (j - 1) + 1) for j in range(2, p + 1)]
    for n in itertools.product(*ranges):
        if sum((j - 1) * x for j, x in zip(range(2, p + 1), n)) <= max_weight:
            yield n


def test_khat_golden_p3():
    mp = build_model(3)
    d = mp.den
    assert khat(mp, 3, (4, 0)) == poly(d, {(0, 0): 1, (d, 0): 1, (2 * d, 0): 1})
    assert khat(mp, 3, (5, 0)) == poly(d, {(9, 1): 1, (9, -1): 1})
    assert khat(mp, 2, (3, 0)) == QPoly.one(d)


def test_kbar_golden_p3():
    mp = build_model(3)
    assert kbar(mp, 1, (2, 0)) == QPoly.one(mp.den)
    assert kbar(mp, 2, (3, 0)) == poly(mp.den, {(mp.den, 0): 1})
    assert kbar(mp, 2, (3, 0)).substitute_qinv() == poly(mp.den, {(-mp.den, 0): 1})


def test_level_restricted_examples():
    assert kostka_level_restricted(1, 0, (2,)) == poly(1, {(1, 0): 1})
    assert kostka_level_restricted(1, 1, (3,)) == poly(1, {(2, 0): 1})
    for k in range(0, 4):
        assert kostka_level_restricted(k, 0, (0,) * k) == QPoly.one(1)


@pytest.mark.parametrize("p", [2, 3, 4, 5])
def test_kbar_vanishes_with_steinberg_factor(p):
    mp = build_model(p)
    for n in vectors(p, 4):
        if n[-1]:
            for ell in range(1, p):
                assert not kbar(mp, ell, n)


@pytest.mark.parametrize("p", [2, 3, 4])
def test_khat_z_symmetric_nonnegative(p):
    mp = build_model(p)
    for n in vectors(p, 6):
        for s in range(1, p + 1):
            f = khat(mp, s, n).flat
            assert all(c > 0 for c in f.values())
            assert f == {(e, -z): c for (e, z), c in f.items()}


@pytest.mark.parametrize("p", [2, 3, 4])
def test_values_at_one_are_fusion_counts(p):
    mp = build_model(p)
    for n in vectors(p, 5):
        counts = decompose_power(mp, n)
        for s in range(1, p):
            assert kbar(mp, s, n).eval_one() == counts[obj(mp, "X", s)]
            assert khat(mp, s, n).eval_one() == counts[obj(mp, "P", s)]
        assert khat(mp, p, n).eval_one() == counts[obj(mp, "X", p)]


def test_empty_product_is_vacuum():
    for p in (2, 3, 4):
        mp = build_model(p)
        zero = (0,) * (p - 1)
        assert kbar(mp, 1, zero) == QPoly.one(mp.den)
        assert khat_felder(mp, 1, zero) == khat(mp, 1, zero) == QPoly.zero(mp.den)


@pytest.mark.parametrize("p", [2, 3, 4])
def test_felder_equals_khat(p):
    mp = build_model(p)
    for m in vectors(p, 5 if p < 4 else 4):
        for s in range(1, p + 1):
            assert khat_felder(mp, s, m) == khat(mp, s, m), (s, m)


@pytest.mark.parametrize("p", [2, 3, 4])
def test_steinberg_forms(p):
    mp = build_model(p)
    for m in vectors(p, 5 if p < 4 else 4):
        ref = khat(mp, p, m)
        assert khat_steinberg(mp, m, fast=False) == ref
        if m[-1]:
            assert khat_steinberg(mp, m) == ref
            assert khat_p_super(mp, m) == ref
            for s in range(1, p + 1):
                assert khat_s_super(mp, s, m) == khat(mp, s, m)


def test_steinberg_examples():
    mp = build_model(3)
    d = mp.den
    assert khat_steinberg(mp, (4, 0)).substitute_qinv() == poly(
        d, {(-2 * d, 0): 1, (-d, 0): 1, (0, 0): 1})
    assert khat_steinberg(mp, (0, 1)) == QPoly.one(d)


def test_single_sum_needs_steinberg_factor():
    mp = build_model(3)
    with pytest.raises((ParameterError, ValueError)):
        khat_s_super(mp, 1, (2, 0))


def test_supernomial_identity_sides():
    mp = build_model(3)
    for m in [(0, 1), (2, 1), (1, 2), (3, 3)]:
        size = m[0] + 2 * m[1]
        for a2 in range(-size - 2, size + 3):
            lhs, rhs = supernomial_identity_sides(mp, m, a2)
            assert lhs == rhs


def test_bad_arguments():
    mp = build_model(3)
    with pytest.raises(ParameterError):
        khat(mp, 4, (1, 0))
    with pytest.raises(ParameterError):
        kbar(mp, 3, (1, 0))
    with pytest.raises(ParameterError):
        khat(mp, 1, (1, 0, 0))
    with pytest.raises(ParameterError):
        khat(mp, 1, (-1, 0))
