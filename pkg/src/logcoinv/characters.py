"""Characters of A(p)-modules as truncated q-series.

All truncation orders are in units of 1/(4p), the model's exponent
denominator.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache

from .errors import ParameterError
from .model import (LabelVector, ModelParams, _check_s, check_n, delta_units, parse_sign,
                    u_verma, v_irreducible, v_of_u)
from .qcomb import (eta_product_inv, pochhammer_inv_coeffs, qsupernomial,
                    weighted_size)
from .series import QPoly, QSeries, ZLaurent

# n-parity of the sl(2) multiplets that make up the W(p)-module X_s^+:
# even n, i.e. even-dimensional multiplets and odd powers of z.
W_PLUS_PARITY = 0


def _check_trunc(trunc: int) -> None:
    if trunc <= 0:
        raise ParameterError(f"truncation order must be positive, got {trunc}")


def _multiplet(n: int) -> dict[int, int]:
    """Character of the n-dimensional sl(2) irrep in z (exponents 2j)."""
    return {k: 1 for k in range(-(n - 1), n, 2)}


def theta_numerator(mp: ModelParams, s: int, trunc: int,
                    parity: int | None = None) -> QPoly:
    """sum_n chi_{pi_n}(z) (q^{E-(n)} - q^{E+(n)}), terms below ``trunc``."""
    p = mp.p
    out: dict[tuple[int, int], int] = defaultdict(int)
    n = 1
    while True:
        e_minus = p * (p * n * n - 2 * n * s + 2 * s - p)
        if e_minus >= trunc:
            break
        if parity is None or n % 2 == parity:
            e_plus = p * (p * n * n + 2 * n * s + 2 * s - p)
            for z in _multiplet(n):
                out[(e_minus, z)] += 1
                if e_plus < trunc:
                    out[(e_plus, z)] -= 1
        n += 1
    return QPoly(out, mp.den)


def chi_irreducible(mp: ModelParams, s: int, trunc: int) -> QSeries:
    """Normalized character of X_s from the theta-function form."""
    _check_s(mp, s)
    _check_trunc(trunc)
    # the numerator is cut at trunc, so the product is only valid below it
    return (eta_product_inv(trunc, mp.den) * theta_numerator(mp, s, trunc)).truncate(trunc)


def chi_w(mp: ModelParams, s: int, sign, trunc: int) -> QSeries:
    """Character of the W(p)-module X_s^+ or X_s^- (one n-parity class)."""
    _check_s(mp, s)
    _check_trunc(trunc)
    parity = W_PLUS_PARITY if parse_sign(sign) > 0 else 1 - W_PLUS_PARITY
    num = theta_numerator(mp, s, trunc, parity)
    return (eta_product_inv(trunc, mp.den) * num).truncate(trunc)


@lru_cache(maxsize=4096)
def _pochhammer_product(ns: tuple[int, ...], length: int) -> tuple[int, ...]:
    """Coefficients of prod_a 1/(q)_{n_a}; ``ns`` sorted and without zeros."""
    if not ns:
        return pochhammer_inv_coeffs(0, length)
    if len(ns) == 1:
        return pochhammer_inv_coeffs(ns[0], length)
    out = list(_pochhammer_product(ns[:-1], length))
    for j in range(1, ns[-1] + 1):
        for i in range(j, length):
            out[i] += out[i - j]
    return tuple(out)


def lattice_points(A2, lin, bound: int, scale_quad: int, scale_lin: int):
    """Yield (n, E) for n >= 0 with E = scale_quad*nA2n + scale_lin*lin.n < bound.

    Completeness rests on all entries of A2 being non-negative, so the
    exponent is bounded below by the sum of its diagonal parts.
    """
    dim = len(lin)
    diag = [scale_quad * A2[a][a] for a in range(dim)]
    lins = [scale_lin * lin[a] for a in range(dim)]

    def fmin(a):
        # min over integers x >= 0 of diag x^2 + lin x
        best, x = 0, 0
        while True:
            x += 1
            val = diag[a] * x * x + lins[a] * x
            if val >= best and 2 * diag[a] * x + lins[a] >= 0:
                return best
            best = min(best, val)

    tail_min = [0] * (dim + 1)
    for a in range(dim - 1, -1, -1):
        tail_min[a] = tail_min[a + 1] + fmin(a)

    n = [0] * dim

    def rec(a: int, partial: int, cross: list[int]):
        if a == dim:
            if partial < bound:
                yield tuple(n), partial
            return
        # cross[a] = sum_{i<a} A2[a][i] n_i, contributes 2*scale_quad*x*cross
        slope = lins[a] + 2 * scale_quad * cross[a]
        room = bound - partial - tail_min[a + 1]
        x = 0
        while True:
            g = diag[a] * x * x + slope * x
            if g >= room and 2 * diag[a] * x + slope >= 0:
                break
            n[a] = x
            new_cross = cross
            if x:
                new_cross = [cross[b] + A2[b][a] * x for b in range(dim)]
            yield from rec(a + 1, partial + g, new_cross)
            x += 1
        n[a] = 0

    yield from rec(0, 0, [0] * dim)


def chi_fermionic(mp: ModelParams, v: LabelVector, trunc: int) -> QSeries:
    """Fermionic sum over n in N^{p+1} for the linear term ``v``."""
    _check_trunc(trunc)
    p, den = mp.p, mp.den
    if len(v) != mp.size:
        raise ParameterError(f"label vector must have {mp.size} components")
    # E(n) in units 1/(4p): p * n.A2.n + 2p * v2.n
    maxlen = -(-trunc // den) if trunc > 0 else 0
    out: dict[tuple[int, int], int] = defaultdict(int)
    for n, e in lattice_points(mp.A2, v.twice, trunc, p, 2 * p):
        length = -(-(trunc - e) // den)
        coeffs = _pochhammer_product(tuple(sorted(x for x in n if x)),
                                     max(length, maxlen))
        z = n[0] - n[1]
        for i in range(length):
            c = coeffs[i]
            if c:
                out[(e + i * den, z)] += c
    return QSeries(out, den, trunc)


def psi_projective(mp: ModelParams, s: int, trunc: int) -> QSeries:
    """Character of the projective module P_s; P_p is X_p itself."""
    _check_s(mp, s)
    _check_trunc(trunc)
    p = mp.p
    if s == p:
        return chi_irreducible(mp, p, trunc)
    shift = p * (2 * s - p)
    other = chi_irreducible(mp, p - s, trunc - min(shift, 0))
    mono = QPoly.from_zlaurent(ZLaurent.symmetric(1), shift, mp.den)
    return chi_irreducible(mp, s, trunc) * 2 + other * mono


def xi_verma(mp: ModelParams, s: int, sign, trunc: int) -> QSeries:
    """Character of the Verma module Y_s^sign via the fermionic sum."""
    return chi_fermionic(mp, v_of_u(mp, u_verma(mp, s, sign)), trunc)


def chi_irreducible_fermionic(mp: ModelParams, s: int, trunc: int) -> QSeries:
    return chi_fermionic(mp, v_irreducible(mp, s), trunc)


def coinvariant_z_coefficient(mp: ModelParams, s: int, m, r: int) -> QPoly:
    """Coefficient of z^r in the double-sum coinvariant character (j odd)."""
    _check_s(mp, s)
    m = check_n(mp, m)
    p, den = mp.p, mp.den
    size = weighted_size(m)
    out = QPoly.zero(den)
    j = 1
    while -s + p * (j + r) - 1 <= size:
        a = -s + p * (j + r)
        if a + 1 >= -size:
            e = (delta_units(mp, r, s) - delta_units(mp, 1, s) + delta_units(mp, j, s - p * r)
                 - delta_units(mp, 1, -s + p * (r + 1)))
            out = out + (qsupernomial(m, a - 1, den) - qsupernomial(m, a + 1, den)).shift(e)
        j += 2
    return out.shift(p * (p - 2 - 2 * size))


def _coinvariant_simplified(mp: ModelParams, s: int, m) -> QPoly:
    p, den = mp.p, mp.den
    mm = m[:-1] + (m[-1] - 1,)
    size = weighted_size(mm)
    out = QPoly.zero(den)
    for r in range((s - size) // p - 1, (s + size) // p + 2):
        out = out + qsupernomial(mm, -s + p * r, den).shift(
            delta_units(mp, r, s) - delta_units(mp, 1, s), r)
    return out


def xi_coinvariant(mp: ModelParams, s: int, m, trunc: int, sign="+",
                   method: str = "auto", r_window: tuple[int, int] | None = None
                   ) -> QSeries:
    """Character of the coinvariants of the Verma module Y_s.

    ``method`` is "simplified" (single sum, needs m_p > 0), "full" (the
    double sum, one z-power at a time) or "auto".  For m_p = 0 the double
    sum does not terminate in negative powers of z, so "full" then needs an
    explicit ``r_window = (lo, hi)`` and returns only those z-powers.
    The sign "-" is the z -> 1/z image of "+".
    """
    _check_s(mp, s)
    _check_trunc(trunc)
    m = check_n(mp, m)
    neg = parse_sign(sign) < 0
    if method == "auto":
        method = "simplified" if m[-1] > 0 else "full"
    if method == "simplified":
        if m[-1] < 1:
            raise ParameterError("the simplified form needs m_p >= 1")
        poly = _coinvariant_simplified(mp, s, m)
    elif method == "full":
        if r_window is None:
            if m[-1] < 1:
                raise ParameterError(
                    "for m_p = 0 the double sum is infinite in 1/z; give r_window")
            size = weighted_size(m)
            r_window = ((s - size) // mp.p - 2, (s + size) // mp.p + 2)
        lo, hi = r_window
        poly = QPoly.zero(mp.den)
        for r in range(lo, hi + 1):
            poly = poly + coinvariant_z_coefficient(mp, s, m, r).shift(0, r)
    else:
        raise ParameterError(f"unknown method {method!r}")
    if neg:
        poly = poly.conjugate_z()
    return QSeries.from_poly(poly, trunc)
