"""Slow, independent reference computations used only by the tests.

None of these share code with the package: they use plain integer lists
and brute-force enumeration.
"""

from __future__ import annotations

import itertools
from math import comb


def partitions_brute(n: int) -> int:
    """Number of partitions of n, by listing non-increasing part sequences."""
    def count(rest, largest):
        if rest == 0:
            return 1
        return sum(count(rest - k, k) for k in range(1, min(rest, largest) + 1))
    return count(n, n)


def poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def poly_divexact(num: list[int], den: list[int]) -> list[int]:
    """Exact long division of integer polynomials (den monic up to sign)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[0]
    for i in range(len(out)):
        c, r = divmod(num[i], lead)
        assert r == 0
        out[i] = c
        for j, d in enumerate(den):
            num[i + j] -= c * d
    assert not any(num)
    return out


def q_factorial_poly(n: int) -> list[int]:
    out = [1]
    for j in range(1, n + 1):
        out = poly_mul(out, [1] + [0] * (j - 1) + [-1])
    return out


def qbin_by_division(n: int, m: int) -> list[int]:
    """[n, m]_q as (q)_n / ((q)_m (q)_{n-m}) by polynomial long division."""
    if m < 0 or m > n:
        return []
    q = poly_divexact(q_factorial_poly(n), q_factorial_poly(m))
    q = poly_divexact(q, q_factorial_poly(n - m))
    while q and q[-1] == 0:
        q.pop()
    return q


def supernomial_at_one(m, j2a: int) -> int:
    """Number of ways to reach doubled weight j2a in a tensor product where
    position k (1-based) contributes m_k factors of dimension k+1."""
    factors = []
    for k, mk in enumerate(m, start=1):
        factors += [list(range(-k, k + 1, 2))] * mk
    return sum(1 for w in itertools.product(*factors) if sum(w) == j2a)


def theta_char_p2_s1(length: int) -> dict[tuple[int, int], int]:
    """chi_1 at p=2 to q^length by brute force: partitions times the theta
    numerator, written with integer exponents of q."""
    part = [partitions_brute(i) for i in range(length)]
    num: dict[tuple[int, int], int] = {}
    n = 1
    while True:
        # exponents (pn^2 -+ 2ns + 2s - p)/(4p) with p=2, s=1 -> (n^2 -+ n)/2
        em, ep = (n * n - n) // 2, (n * n + n) // 2
        if em >= length:
            break
        for z in range(-(n - 1), n, 2):
            num[(em, z)] = num.get((em, z), 0) + 1
            num[(ep, z)] = num.get((ep, z), 0) - 1
        n += 1
    out: dict[tuple[int, int], int] = {}
    for (e, z), c in num.items():
        for i in range(length - e):
            if part[i]:
                out[(e + i, z)] = out.get((e + i, z), 0) + c * part[i]
    return {k: v for k, v in out.items() if v and k[0] < length}


def binomial(n: int, m: int) -> int:
    return comb(n, m) if 0 <= m <= n else 0
