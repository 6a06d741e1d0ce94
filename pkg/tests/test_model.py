from fractions import Fraction as F

import pytest

from logcoinv.errors import ParameterError
from logcoinv.model import (LabelVector, build_model, delta_rs, delta_units,
                            u_of_n, u_sr, u_vac, u_verma, v_irreducible, v_of_u)


def lv(*c):
    return LabelVector.from_components(c)


def test_gordon_matrix_small_p():
    assert build_model(2).A == ((1, 1, 1), (1, 1, 1), (1, 1, 2))
    assert build_model(3).A == ((F(3, 2), F(3, 2), 1, 2), (F(3, 2), F(3, 2), 1, 2),
                                (1, 1, 2, 2), (2, 2, 2, 4))


def test_model_constants():
    mp = build_model(2)
    assert mp.c == -2
    assert build_model(3).c == F(-7)
    mp5 = build_model(5)
    assert mp5.Delta == (F(13, 4), F(13, 4), 2, 4, 6, 8)
    assert mp5.v1 == lv(2, 2, 1, 2, 3, 4)
    assert mp5.den == 20


@pytest.mark.parametrize("p", range(2, 8))
def test_matrix_invariants(p):
    A = build_model(p).A
    n = p + 1
    for i in range(n):
        for j in range(n):
            assert A[i][j] == A[j][i]
            assert A[i][j] >= F(1, 2)
    assert A[0][0] == F(p, 2)


def test_build_model_rejects_small_p():
    with pytest.raises(ParameterError):
        build_model(1)
    with pytest.raises(ParameterError):
        build_model(2.5)


def test_u_vac():
    mp = build_model(3)
    assert u_vac(mp, 1) == lv(0, 0, 0, 0)
    assert u_vac(mp, 2) == lv(F(1, 2), F(1, 2), 1, 1)
    assert u_vac(mp, 3) == lv(1, 1, 1, 2)
    with pytest.raises(ParameterError):
        u_vac(mp, 4)


def test_u_verma():
    assert u_verma(build_model(3), 3, "+") == lv(1, 1, 2, 2)
    assert u_verma(build_model(2), 1, "+") == lv(0, 1, 0)
    assert u_verma(build_model(2), 1, "-") == lv(1, 0, 0)
    with pytest.raises(ParameterError):
        u_verma(build_model(2), 1, "x")


def test_u_sr():
    mp2, mp3 = build_model(2), build_model(3)
    for s in (1, 2, 3):
        assert u_sr(mp3, s, 0) == u_verma(mp3, s, "+")
    assert u_sr(mp2, 1, -1) == u_verma(mp2, 1, "-")
    # ((s - rp - 1)/2, ((r+2)p - s - 1)/2, s-1, s-1) at p=3, s=2, r=1
    assert u_sr(mp3, 2, 1) == lv(-1, 3, 1, 1)


@pytest.mark.parametrize("p", range(2, 7))
def test_u_of_n_unit_vectors(p):
    mp = build_model(p)
    for s in range(2, p + 1):
        e = [0] * (p - 1)
        e[s - 2] = 1
        assert u_of_n(mp, e) == u_vac(mp, s)
    assert u_of_n(mp, [0] * (p - 1)) == lv(*([0] * (p + 1)))


def test_u_of_n_is_additive():
    mp = build_model(4)
    n = (2, 1, 3)
    total = lv(0, 0, 0, 0, 0)
    for j, k in enumerate(n, start=2):
        total = total + u_vac(mp, j).scaled(k)
    assert u_of_n(mp, n) == total
    assert u_of_n(build_model(3), (2, 0)) == lv(1, 1, 2, 2)


def test_v_of_u():
    mp = build_model(3)
    assert v_of_u(mp, lv(0, 0, 0, 0)) == mp.v1
    assert v_of_u(mp, u_vac(mp, 2)) == lv(F(1, 2), F(1, 2), 0, 1)
    assert v_irreducible(mp, 3) == lv(0, 0, 0, 0)


def test_delta():
    mp = build_model(2)
    assert delta_rs(mp, 1, 1) == 0
    assert delta_rs(mp, 2, 1) == 1
    for p in range(2, 6):
        mp = build_model(p)
        for s in range(1, p + 1):
            assert delta_rs(mp, 1, s) == F(s * s - 1, 4 * p) + F(1 - s, 2)
            for r in range(-4, 5):
                assert delta_units(mp, r, s) == delta_rs(mp, r, s) * 4 * p
            for r in range(1, 8):
                assert delta_rs(mp, r, s) >= delta_rs(mp, 1, s)


def test_label_vector_rejects_quarter_integers():
    with pytest.raises(ParameterError):
        lv(F(1, 4), 0)
    assert lv(1, 2).swapped() == lv(2, 1)
