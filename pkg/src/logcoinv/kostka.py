"""Multiplicity polynomials of irreducible and projective summands.

``khat`` and ``kbar`` are the graded multiplicities of P_s and X_s in the
fused power X_2^n2 ... X_p^np, written in the variable q (the
decompositions themselves use q -> 1/q).  The alternating-sum routines
rebuild the same polynomials from q-supernomials.
"""

from __future__ import annotations

from collections import defaultdict

from .errors import ParameterError
from .model import (ModelParams, _check_s, check_n, delta_units, u_of_n,
                    v_irreducible)
from .qcomb import qbin_coeffs, qsupernomial, weighted_size
from .series import QPoly


def _accumulate(out, e: int, z: int, factors, den: int) -> None:
    # multiply together integer-power coefficient tuples, add at q^e z^z
    poly = {0: 1}
    for coeffs in factors:
        nxt: dict[int, int] = defaultdict(int)
        for d1, c1 in poly.items():
            for d2, c2 in enumerate(coeffs):
                if c2:
                    nxt[d1 + d2] += c1 * c2
        poly = nxt
    for d, c in poly.items():
        out[(e + d * den, z)] += c


def khat(mp: ModelParams, ell: int, n) -> QPoly:
    """Multiplicity polynomial of the projective P_ell (Gaussian-binomial sum)."""
    _check_s(mp, ell)
    n = check_n(mp, n)
    p, den, A2, dim = mp.p, mp.den, mp.A2, mp.size
    vl = v_irreducible(mp, ell).twice
    c2 = [a - b - c for a, b, c in zip(u_of_n(mp, n).twice, vl, mp.v1.twice)]
    out: dict[tuple[int, int], int] = defaultdict(int)
    if min(c2) < 0:
        return QPoly(out, den)
    s = [0] * dim

    def rec(a: int, load: list[int]):
        # load[b] = (s.A2)_b over the coordinates fixed so far
        if a == dim:
            factors = []
            for b in range(dim):
                top2 = c2[b] - load[b] + 2 * s[b]
                if top2 % 2:
                    return
                coeffs = qbin_coeffs(top2 // 2, s[b])
                if not coeffs:
                    return
                factors.append(coeffs)
            quad = sum(s[i] * load[i] for i in range(dim))
            e = p * quad + 2 * p * sum(vl[i] * s[i] for i in range(dim))
            _accumulate(out, e, s[0] - s[1], factors, den)
            return
        x = 0
        cur = load
        while all(cur[b] <= c2[b] for b in range(dim)):
            s[a] = x
            rec(a + 1, cur)
            x += 1
            cur = [load[b] + A2[a][b] * x for b in range(dim)]
        s[a] = 0

    rec(0, [0] * dim)
    return QPoly(out, den)


def kostka_level_restricted(k: int, ell: int, u, den: int = 1) -> QPoly:
    """Level-restricted Kostka polynomial from its fermionic sum.

    ``u`` has k non-negative entries (1-based weights, |u| = sum i*u_i);
    the sum runs over s >= 0 with 2|s| = |u| - ell in the same weighting.
    """
    u = tuple(int(x) for x in u)
    if k < 0 or len(u) != k:
        raise ParameterError(f"u must have {k} components")
    if ell < 0:
        raise ParameterError("ell must be non-negative")
    size = weighted_size(u)
    out: dict[tuple[int, int], int] = defaultdict(int)
    if (size - ell) % 2 or size < ell:
        return QPoly(out, den)
    target = (size - ell) // 2
    v = [max(i - k + ell, 0) for i in range(1, k + 1)]
    # Abar u: (u Abar)_a = sum_i u_i min(i, a)
    uA = [sum(u[i] * min(i + 1, a + 1) for i in range(k)) for a in range(k)]
    s = [0] * k

    def rec(a: int, remaining: int):
        if a == k:
            if remaining:
                return
            sA = [sum(s[i] * min(i + 1, b + 1) for i in range(k)) for b in range(k)]
            factors = []
            for b in range(k):
                coeffs = qbin_coeffs(uA[b] - 2 * sA[b] - v[b] + s[b], s[b])
                if not coeffs:
                    return
                factors.append(coeffs)
            e = sum(s[i] * sA[i] for i in range(k)) + sum(v[i] * s[i] for i in range(k))
            _accumulate(out, e * den, 0, factors, den)
            return
        weight = a + 1
        for x in range(remaining // weight + 1):
            s[a] = x
            rec(a + 1, remaining - x * weight)
        s[a] = 0

    rec(0, target)
    return QPoly(out, den)


def kbar(mp: ModelParams, ell: int, n) -> QPoly:
    """Multiplicity polynomial of the irreducible X_ell (ell < p)."""
    if not 1 <= ell <= mp.p - 1:
        raise ParameterError(f"ell must lie in 1..{mp.p - 1}, got {ell}")
    n = check_n(mp, n)
    if n[-1] > 0:
        return QPoly.zero(mp.den)
    size = weighted_size(n)
    kost = kostka_level_restricted(mp.p - 2, ell - 1, n[:-1], mp.den)
    # prefactor q^{(ell - |n| - 1)/2} = 2p (ell - |n| - 1) units
    return kost.shift(2 * mp.p * (ell - size - 1))


def _window(mp: ModelParams, m) -> int:
    # every z^r with |r| beyond this is zero in khat (z = s+ - s- and A_{++} > 0)
    return weighted_size(m) + 2


def _check_tail(poly: dict, lo: int, hi: int, what: str) -> None:
    for r in (lo, hi):
        if poly.get(r):
            raise ArithmeticError(f"{what}: non-vanishing coefficient at z^{r}")


def _from_z_coeffs(coeffs: dict, den: int) -> QPoly:
    out = QPoly.zero(den)
    for r, c in coeffs.items():
        out = out + c.shift(0, r)
    return out


def felder_z_coefficient(mp: ModelParams, s: int, m, r: int) -> QPoly:
    """Coefficient of z^r in the double alternating sum over odd j, n."""
    _check_s(mp, s)
    m = check_n(mp, m)
    p, den = mp.p, mp.den
    size = weighted_size(m)
    D = lambda a, b: delta_units(mp, a, b)  # noqa: E731
    out = QPoly.zero(den)
    j = 1
    while True:
        if p * (j + 1 + r) - s - 1 > size and p * (j + 1 + r) + s - 1 > size:
            break
        n = 1
        while True:
            k = j + n + r
            if p * k - s - 1 > size and p * k + s - 1 > size:
                break
            # skip (j, n) whose supernomial arguments all lie below -|m|
            if not (p * k + s + 1 < -size and p * k - s + 1 < -size):
                e1 = D(j + r, s) + D(n, s - p * (j + r)) - D(1, -s + p * (j + r + 1))
                t1 = qsupernomial(m, p * k - s - 1, den) - qsupernomial(m, p * k - s + 1, den)
                e2 = (D(j + r + 1, p - s) + D(n, -s - p * (j + r))
                      - D(1, s + p * (j + r + 1)))
                t2 = qsupernomial(m, p * k + s - 1, den) - qsupernomial(m, p * k + s + 1, den)
                out = out + t1.shift(e1) - t2.shift(e2)
            n += 2
        j += 2
    return out.shift(p * (p - 2 - 2 * size) - D(1, s))


def khat_felder(mp: ModelParams, s: int, m) -> QPoly:
    """K-hat rebuilt from the alternating sum over the Felder complex.

    Only the coefficients of z^r with r >= 0 are evaluated and the rest is
    filled in by z -> 1/z symmetry.  When m_p = 0 the literal sum also
    produces non-cancelling tails at negative r, so the negative side is
    not taken from the formula.
    """
    m = check_n(mp, m)
    W = _window(mp, m)
    coeffs = {r: felder_z_coefficient(mp, s, m, r) for r in range(0, W + 1)}
    _check_tail(coeffs, W, W, "alternating sum")
    out = QPoly.zero(mp.den)
    for r, c in coeffs.items():
        if r == 0:
            out = out + c
        else:
            out = out + c.shift(0, r) + c.shift(0, -r)
    return out


def _reduce_top(mp: ModelParams, m) -> tuple[int, ...]:
    m = check_n(mp, m)
    if m[-1] < 1:
        raise ParameterError("this form needs m_p >= 1")
    return m[:-1] + (m[-1] - 1,)


def khat_s_super(mp: ModelParams, s: int, m) -> QPoly:
    """Single alternating sum for K-hat, valid when m_p > 0."""
    _check_s(mp, s)
    mm = _reduce_top(mp, m)
    p, den = mp.p, mp.den
    size = weighted_size(mm)
    D = lambda a, b: delta_units(mp, a, b)  # noqa: E731
    W = _window(mp, m)
    coeffs = {}
    for r in range(-W, W + 1):
        c = QPoly.zero(den)
        j = 1
        # supernomials vanish once p(j+r) - s exceeds |m - e_p|
        while p * (j + r) - s <= size:
            if p * (j + r) + s >= -size:
                c = c + qsupernomial(mm, -s + p * (j + r), den).shift(D(j + r, s) - D(1, s))
                c = c - qsupernomial(mm, s + p * (j + r), den).shift(
                    D(j + r + 1, p - s) - D(1, s))
            j += 2
        coeffs[r] = c
    _check_tail(coeffs, -W, W, "single alternating sum")
    return _from_z_coeffs(coeffs, den)


def khat_p_super(mp: ModelParams, m) -> QPoly:
    """sum_j z^j q^{Delta_{j+1,p} - Delta_{1,p}} S(m - e_p, pj/2), for m_p > 0."""
    mm = _reduce_top(mp, m)
    p, den = mp.p, mp.den
    size = weighted_size(mm)
    out = QPoly.zero(den)
    for j in range(-(size // p), size // p + 1):
        e = delta_units(mp, j + 1, p) - delta_units(mp, 1, p)
        out = out + qsupernomial(mm, p * j, den).shift(e, j)
    return out


def khat_steinberg(mp: ModelParams, m, fast: bool = True) -> QPoly:
    """K-hat for the Steinberg module X_p from its z-symmetric double sum."""
    m = check_n(mp, m)
    if fast and m[-1] > 0:
        return khat_p_super(mp, m)
    p, den = mp.p, mp.den
    size = weighted_size(m)
    D = lambda a, b: delta_units(mp, a, b)  # noqa: E731
    base = -D(1, p) - 2 * p * (size - p + 1)
    out = QPoly.zero(den)

    def diff(a2: int) -> QPoly:
        return qsupernomial(m, a2 - 1, den) - qsupernomial(m, a2 + 1, den)

    j = 0
    while 2 * p * j + p - 1 <= size:
        out = out + diff(2 * p * j + p).shift(D(2 * j + 1, p) + base + 4 * p * p * j)
        j += 1
    r = 1
    while p * r + p - 1 <= size:
        j = 0
        while 2 * p * j + p * r + p - 1 <= size:
            e = D(2 * j + r + 1, p) + base + 4 * p * p * j + 2 * p * p * r
            t = diff(2 * p * j + p * r + p).shift(e)
            out = out + t.shift(0, r) + t.shift(0, -r)
            j += 1
        r += 1
    return out


def supernomial_identity_sides(mp: ModelParams, m, a2: int) -> tuple[QPoly, QPoly]:
    """Both sides of the identity expressing S(m - e_p, .) through S(m, .).

    ``a2`` is the supernomial index doubled, as in ``qsupernomial``.
    """
    mm = _reduce_top(mp, m)
    p, den = mp.p, mp.den
    size = weighted_size(m)
    lhs = qsupernomial(mm, a2, den)
    rhs = QPoly.zero(den)
    j = 1
    while a2 + p * j - 1 <= size:
        e = delta_units(mp, j, -a2) - delta_units(mp, 1, p + a2)
        rhs = rhs + (qsupernomial(m, a2 + p * j - 1, den)
                     - qsupernomial(m, a2 + p * j + 1, den)).shift(e)
        j += 2
    return lhs, rhs.shift(p * (p - 2 - 2 * size))
