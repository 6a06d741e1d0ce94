"""Gaussian binomials, q-Pochhammer inverses and q-supernomials."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from .series import QPoly, QSeries


def _as_int(x) -> int | None:
    """Return x as an int if it is an integral rational, else None."""
    if isinstance(x, int):
        return x
    if isinstance(x, Rational):
        x = Fraction(x)
        return x.numerator if x.denominator == 1 else None
    raise TypeError(f"expected a rational number, got {type(x).__name__}")


@lru_cache(maxsize=None)
def qbin_coeffs(n: int, m: int) -> tuple[int, ...]:
    """Coefficients (q^0 upwards) of the Gaussian binomial [n, m]_q.

    Integer arguments only; empty tuple when the binomial vanishes.
    """
    if n < 0 or m < 0 or m > n:
        return ()
    if m == 0 or m == n:
        return (1,)
    if m > n - m:
        return qbin_coeffs(n, n - m)
    # [n, m] = [n-1, m-1] + q^m [n-1, m]
    a = qbin_coeffs(n - 1, m - 1)
    b = qbin_coeffs(n - 1, m)
    out = [0] * (m * (n - m) + 1)
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i + m] += c
    return tuple(out)


def qbin(n, m, den: int = 1) -> QPoly:
    """Gaussian binomial as a QPoly; zero for fractional/negative arguments or m > n."""
    ni, mi = _as_int(n), _as_int(m)
    if ni is None or mi is None:
        return QPoly.zero(den)
    return QPoly.from_qlist(qbin_coeffs(ni, mi), den)


@lru_cache(maxsize=256)
def pochhammer_inv_coeffs(n: int, length: int) -> tuple[int, ...]:
    """First ``length`` coefficients of 1/((1-q)(1-q^2)...(1-q^n))."""
    if n == 0:
        return (1,) + (0,) * (length - 1) if length > 0 else ()
    out = list(pochhammer_inv_coeffs(n - 1, length))
    # divide by (1 - q^n): running sum with stride n
    for i in range(n, length):
        out[i] += out[i - n]
    return tuple(out)


@lru_cache(maxsize=16)
def partition_coeffs(length: int) -> tuple[int, ...]:
    """First ``length`` partition numbers, by Euler's pentagonal recurrence."""
    p = [0] * length
    if length:
        p[0] = 1
    for n in range(1, length):
        total, k = 0, 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[n - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return tuple(p)


def _int_series(coeffs, den: int, trunc: int) -> QSeries:
    return QSeries({(i * den, 0): c for i, c in enumerate(coeffs)}, den, trunc, 0)


def _length(den: int, trunc: int) -> int:
    # number of integer powers q^i with i*den < trunc
    return max(0, -(-trunc // den))


def qpochhammer_inv(n: int, trunc: int, den: int = 1) -> QSeries:
    """1/(q)_n truncated below q^(trunc/den)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return _int_series(pochhammer_inv_coeffs(n, _length(den, trunc)), den, trunc)


def eta_product_inv(trunc: int, den: int = 1) -> QSeries:
    """1/prod_{n>=1}(1-q^n), i.e. the partition generating function."""
    return _int_series(partition_coeffs(_length(den, trunc)), den, trunc)


def weighted_size(m) -> int:
    """``sum_k k*m_k`` over 1-based positions."""
    return sum(k * mk for k, mk in enumerate(m, start=1))


@lru_cache(maxsize=None)
def _supernomial_coeffs(m: tuple[int, ...], j2a: int) -> dict[int, int]:
    size = weighted_size(m)
    if (j2a + size) % 2 or abs(j2a) > size:
        return {}
    total = (j2a + size) // 2
    k = len(m)
    # tails[r] = T_{r+1} - T_r = sum_{l > r} m_l  (1-based r)
    tails = [sum(m[r:]) for r in range(k + 1)]
    out: dict[int, int] = {}

    def rec(pos: int, prev_j: int, remaining: int, expo: int, poly: dict):
        # pos is 1-based; prev_j is j_{pos+1} (0 above the top)
        top = m[pos - 1] + prev_j
        if pos == 1:
            j = remaining
            if j < 0 or j > top:
                return
            e = expo + ((tails[1] - prev_j) * j if k > 1 else 0)
            for d, c in _mul_dense(poly, qbin_coeffs(top, j)).items():
                out[d + e] = out.get(d + e, 0) + c
            return
        for j in range(0, min(top, remaining) + 1):
            e = expo + ((tails[pos] - prev_j) * j if pos < k else 0)
            rec(pos - 1, j, remaining - j, e, _mul_dense(poly, qbin_coeffs(top, j)))

    if k == 0:
        return {0: 1} if total == 0 else {}
    rec(k, 0, total, 0, {0: 1})
    return {d: c for d, c in out.items() if c}


def _mul_dense(poly: dict, coeffs) -> dict:
    out: dict[int, int] = {}
    for d1, c1 in poly.items():
        for d2, c2 in enumerate(coeffs):
            if c2:
                out[d1 + d2] = out.get(d1 + d2, 0) + c1 * c2
    return out


def qsupernomial(m, j2a: int, den: int = 1) -> QPoly:
    """q-supernomial coefficient indexed by a weight vector and a half-integer.

    ``m`` lists multiplicities at 1-based positions 1..p-1 (position k counts
    (k+1)-dimensional factors); ``j2a`` is twice the half-integer index.
    Outside ``-|m| <= j2a <= |m|`` (or with the wrong parity) the result is 0.
    """
    coeffs = _supernomial_coeffs(tuple(int(x) for x in m), int(j2a))
    return QPoly({(d * den, 0): c for d, c in coeffs.items()}, den)
