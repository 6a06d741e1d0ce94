"""Model data for fixed p: the Gordon-type matrix and label vectors.

Vectors indexed by the generator set are laid out as ``(+, -, 1, ..., p-1)``.
Their components are half-integers and are stored doubled, as ints.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import ParameterError

PLUS, MINUS = 0, 1


def parse_sign(sign) -> int:
    """Map '+', '-', +1, -1 to +1 / -1."""
    if sign in ("+", "plus", 1):
        return 1
    if sign in ("-", "minus", -1):
        return -1
    raise ParameterError(f"sign must be '+' or '-', got {sign!r}")


@dataclass(frozen=True)
class LabelVector:
    """A (p+1)-vector of half-integers, kept as doubled integers."""

    twice: tuple[int, ...]

    @classmethod
    def from_components(cls, comps) -> LabelVector:
        tw = []
        for c in comps:
            c2 = Fraction(c) * 2
            if c2.denominator != 1:
                raise ParameterError(f"component {c} is not a half-integer")
            tw.append(int(c2))
        return cls(tuple(tw))

    @property
    def components(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(t, 2) for t in self.twice)

    def __len__(self) -> int:
        return len(self.twice)

    def __add__(self, other: LabelVector) -> LabelVector:
        return LabelVector(tuple(a + b for a, b in zip(self.twice, other.twice)))

    def __sub__(self, other: LabelVector) -> LabelVector:
        return LabelVector(tuple(a - b for a, b in zip(self.twice, other.twice)))

    def __neg__(self) -> LabelVector:
        return LabelVector(tuple(-a for a in self.twice))

    def scaled(self, k: int) -> LabelVector:
        return LabelVector(tuple(k * a for a in self.twice))

    def swapped(self) -> LabelVector:
        """Exchange the + and - components."""
        t = self.twice
        return LabelVector((t[1], t[0]) + t[2:])

    def __repr__(self) -> str:
        return "LabelVector(" + ", ".join(str(c) for c in self.components) + ")"


@dataclass(frozen=True)
class ModelParams:
    p: int
    A2: tuple[tuple[int, ...], ...] = field(repr=False)
    Delta: tuple[Fraction, ...] = field(repr=False)
    v1: LabelVector = field(repr=False)
    c: Fraction = field(repr=False)

    @property
    def den(self) -> int:
        """Exponent denominator 4p."""
        return 4 * self.p

    @property
    def size(self) -> int:
        return self.p + 1

    @property
    def A(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(tuple(Fraction(x, 2) for x in row) for row in self.A2)


@lru_cache(maxsize=None)
def build_model(p: int) -> ModelParams:
    if not isinstance(p, int) or p < 2:
        raise ParameterError(f"p must be an integer >= 2, got {p!r}")
    n = p + 1
    A2 = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i < 2 and j < 2:
                A2[i][j] = p
            elif i < 2:
                A2[i][j] = 2 * (j - 1)
            elif j < 2:
                A2[i][j] = 2 * (i - 1)
            else:
                A2[i][j] = 4 * min(i - 1, j - 1)
    delta = (Fraction(3 * p - 2, 4),) * 2 + tuple(Fraction(2 * k) for k in range(1, p))
    v1 = LabelVector((p - 1, p - 1) + tuple(2 * k for k in range(1, p)))
    c = 13 - 6 * p - Fraction(6, p)
    return ModelParams(p, tuple(tuple(r) for r in A2), delta, v1, c)


def _check_s(mp: ModelParams, s: int) -> None:
    if not 1 <= s <= mp.p:
        raise ParameterError(f"s must lie in 1..{mp.p}, got {s}")


def u_vac(mp: ModelParams, s: int) -> LabelVector:
    """Label of the irreducible module X_s."""
    _check_s(mp, s)
    h = tuple(2 * min(k, s - 1) for k in range(1, mp.p))
    return LabelVector((s - 1, s - 1) + h)


def u_verma(mp: ModelParams, s: int, sign) -> LabelVector:
    """Label of the Verma module Y_s^+ or Y_s^-."""
    _check_s(mp, s)
    p = mp.p
    plus = LabelVector((s - 1, s - 1 + 2 * (p - s)) + (2 * (s - 1),) * (p - 1))
    return plus if parse_sign(sign) > 0 else plus.swapped()


def u_sr(mp: ModelParams, s: int, r: int) -> LabelVector:
    _check_s(mp, s)
    p = mp.p
    return LabelVector((s - r * p - 1, (r + 2) * p - s - 1) + (2 * (s - 1),) * (p - 1))


def check_n(mp: ModelParams, n) -> tuple[int, ...]:
    n = tuple(int(x) for x in n)
    if len(n) != mp.p - 1 or any(x < 0 for x in n):
        raise ParameterError(
            f"n must have {mp.p - 1} non-negative components, got {n}")
    return n


def u_of_n(mp: ModelParams, n) -> LabelVector:
    """(1/2) m A with m = (0, 0, n_2, ..., n_p)."""
    n = check_n(mp, n)
    m = (0, 0) + n
    # doubled components of (1/2) m A are sum_i m_i A_ij
    tw = tuple(sum(m[i] * mp.A2[i][j] for i in range(mp.size)) // 2
               for j in range(mp.size))
    return LabelVector(tw)


def v_of_u(mp: ModelParams, u: LabelVector) -> LabelVector:
    return mp.v1 - u


def v_irreducible(mp: ModelParams, s: int) -> LabelVector:
    return v_of_u(mp, u_vac(mp, s))


def delta_rs(mp: ModelParams, r: int, s: int) -> Fraction:
    """Conformal weight Delta_{r,s}; the formula is used for any integers r, s."""
    p = mp.p
    return (Fraction(p * (r * r - 1), 4) + Fraction(s * s - 1, 4 * p)
            + Fraction(1 - r * s, 2))


def delta_units(mp: ModelParams, r: int, s: int) -> int:
    """Delta_{r,s} in units of 1/(4p)."""
    p = mp.p
    return p * p * (r * r - 1) + (s * s - 1) + 2 * p * (1 - r * s)
