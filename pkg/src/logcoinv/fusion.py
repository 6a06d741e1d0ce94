"""Fusion ring on the objects X_s, P_s and decompositions of fused powers.

Ungraded vectors carry int multiplicities; graded ones carry QPoly
multiplicities.  P_p is the same object as X_p and is always stored as X_p.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .errors import ParameterError
from .kostka import kbar, khat
from .model import ModelParams, check_n
from .series import QPoly


@dataclass(frozen=True, order=True)
class FusionObject:
    kind: str  # "X" or "P"
    s: int

    def __str__(self) -> str:
        return f"{self.kind}{self.s}"


def obj(mp: ModelParams, kind: str, s: int) -> FusionObject:
    if kind not in ("X", "P"):
        raise ParameterError(f"object kind must be X or P, got {kind!r}")
    if not 1 <= s <= mp.p:
        raise ParameterError(f"index must lie in 1..{mp.p}, got {s}")
    if kind == "P" and s == mp.p:
        kind = "X"
    return FusionObject(kind, s)


class FusionVector:
    """Formal combination of objects with int or QPoly multiplicities."""

    __slots__ = ("_m",)

    def __init__(self, mults: Mapping[FusionObject, object] | None = None):
        self._m = {o: c for o, c in (mults or {}).items() if c}

    def items(self):
        return sorted(self._m.items())

    def __getitem__(self, o: FusionObject):
        return self._m.get(o, 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FusionVector):
            return NotImplemented
        return self._m == other._m

    def __add__(self, other: FusionVector) -> FusionVector:
        out = dict(self._m)
        for o, c in other._m.items():
            out[o] = out[o] + c if o in out else c
        return FusionVector(out)

    def scaled(self, k) -> FusionVector:
        return FusionVector({o: c * k for o, c in self._m.items()})

    def evaluate_one(self) -> FusionVector:
        """Replace QPoly multiplicities by their value at q = z = 1."""
        return FusionVector({o: (c.eval_one() if isinstance(c, QPoly) else c)
                             for o, c in self._m.items()})

    def objects(self) -> list[FusionObject]:
        return sorted(self._m)

    def __repr__(self) -> str:
        if not self._m:
            return "FusionVector(0)"
        return "FusionVector(" + " + ".join(f"{c}*{o}" for o, c in self.items()) + ")"


def _span(lo: int, hi: int) -> range:
    # step-2 direct sum; empty when hi < lo
    return range(lo, hi + 1, 2)


def _add_R(out: dict, mp: ModelParams, j: int, k: int, double_top: bool = False) -> None:
    # k copies of R_j.  R_j = P_j for j < p.  R_p is a single X_p = P_p; the
    # doubled reading R_p = 2 P_p is kept only for the literal display below.
    if j == mp.p:
        out[obj(mp, "X", j)] += 2 * k if double_top else k
    else:
        out[obj(mp, "P", j)] += k


def _check_range(mp: ModelParams, *idx) -> None:
    for i in idx:
        if not 1 <= i <= mp.p:
            raise ParameterError(f"index must lie in 1..{mp.p}, got {i}")


def tensor_xx(mp: ModelParams, r: int, s: int) -> FusionVector:
    _check_range(mp, r, s)
    p = mp.p
    out: dict = defaultdict(int)
    for j in _span(abs(r - s) + 1, min(r + s - 1, 2 * p - r - s - 1)):
        out[obj(mp, "X", j)] += 1
    for j in _span(2 * p - r - s + 1, p):
        out[obj(mp, "P", j)] += 1
    return FusionVector(out)


def tensor_xp(mp: ModelParams, r: int, s: int) -> FusionVector:
    """X_r (x) P_s for 1 <= s <= p-1.

    The four displayed cases are merged into one set of ranges:
    a single block from |r-s|+1 to min(r+s-1, 2p-r-s-1), then doubled
    blocks from 2p-r-s+1 and from p+s-r+1 up to p.  Each case's own ranges
    are recovered when the empty blocks are dropped, except case r > s,
    r+s <= p, whose printed upper bound 2p-s-r-1 exceeds p.
    """
    _check_range(mp, r)
    p = mp.p
    if not 1 <= s <= p - 1:
        raise ParameterError(f"P index must lie in 1..{p - 1}, got {s}")
    blocks = [(abs(r - s) + 1, min(r + s - 1, 2 * p - r - s - 1), 1),
              (2 * p - r - s + 1, p, 2),
              (p + s - r + 1, p, 2)]
    out: dict = defaultdict(int)
    for lo, hi, k in blocks:
        for j in _span(lo, hi):
            _add_R(out, mp, j, k)
    return FusionVector(out)


def _tensor_xp_display(mp: ModelParams, r: int, s: int) -> FusionVector:
    # The four-case formula read literally, with R_p = 2 P_p.  Fails the
    # ring checks; kept so the tests can document that.
    p = mp.p
    if r <= s and r + s <= p:
        blocks = [(s - r + 1, s + r - 1, 1)]
    elif r <= s:
        blocks = [(s - r + 1, 2 * p - s - r - 1, 1), (2 * p - s - r + 1, p, 2)]
    elif r + s <= p:
        blocks = [(r - s + 1, 2 * p - s - r - 1, 1), (p + s - r + 1, p, 2)]
    else:
        blocks = [(r - s + 1, 2 * p - s - r - 1, 1), (2 * p - s - r + 1, p, 2),
                  (p + s - r + 1, p, 2)]
    out: dict = defaultdict(int)
    for lo, hi, k in blocks:
        for j in _span(lo, hi):
            if j <= p:
                _add_R(out, mp, j, k, double_top=True)
    return FusionVector(out)


def tensor_pp(mp: ModelParams, r: int, s: int) -> FusionVector:
    """P_r (x) P_s for 1 <= r, s <= p-1 (symmetrized)."""
    p = mp.p
    for i in (r, s):
        if not 1 <= i <= p - 1:
            raise ParameterError(f"P index must lie in 1..{p - 1}, got {i}")
    if r > s:
        r, s = s, r
    if r + s <= p:
        blocks = [(s - r + 1, s + r - 1, 2), (p - r - s + 1, p + r - s - 1, 2),
                  (p + r - s + 1, p, 4), (s + r + 1, p, 4)]
    else:
        blocks = [(s - r + 1, 2 * p - s - r - 1, 2), (r + s - p + 1, p + r - s - 1, 2),
                  (2 * p - r - s + 1, p, 4), (p + r - s + 1, p, 4)]
    out: dict = defaultdict(int)
    for lo, hi, k in blocks:
        for j in _span(lo, hi):
            _add_R(out, mp, j, k)
    return FusionVector(out)


@lru_cache(maxsize=None)
def _product_cached(mp: ModelParams, a: FusionObject, b: FusionObject) -> FusionVector:
    if a.kind == "X" and b.kind == "X":
        return tensor_xx(mp, a.s, b.s)
    if a.kind == "X":
        return tensor_xp(mp, a.s, b.s)
    if b.kind == "X":
        return tensor_xp(mp, b.s, a.s)
    return tensor_pp(mp, a.s, b.s)


def tensor_objects(mp: ModelParams, a: FusionObject, b: FusionObject) -> FusionVector:
    return _product_cached(mp, a, b)


def fuse(mp: ModelParams, x: FusionVector, y: FusionVector) -> FusionVector:
    """Bilinear extension of the tensor product to ungraded vectors."""
    out: dict = defaultdict(int)
    for a, ca in x.items():
        for b, cb in y.items():
            for o, c in tensor_objects(mp, a, b).items():
                out[o] += ca * cb * c
    return FusionVector(out)


def unit(mp: ModelParams) -> FusionVector:
    return FusionVector({obj(mp, "X", 1): 1})


def decompose_power(mp: ModelParams, n, order=None) -> FusionVector:
    """Ungraded decomposition of X_2^n2 (x) ... (x) X_p^np.

    Factors are folded left to right in the order X_2, X_3, ...; ``order``
    may give an explicit sequence of X-indices instead (used for the
    associativity checks).
    """
    n = check_n(mp, n)
    if order is None:
        order = [j for j, k in enumerate(n, start=2) for _ in range(k)]
    acc = unit(mp)
    for j in order:
        acc = fuse(mp, acc, FusionVector({obj(mp, "X", j): 1}))
    return acc


def graded_decomposition(mp: ModelParams, n) -> FusionVector:
    """Decomposition with graded multiplicities (q -> 1/q applied)."""
    n = check_n(mp, n)
    p = mp.p
    out: dict = {}
    for s in range(1, p):
        out[obj(mp, "X", s)] = kbar(mp, s, n).substitute_qinv()
        out[obj(mp, "P", s)] = khat(mp, s, n).substitute_qinv()
    out[obj(mp, "X", p)] = khat(mp, p, n).substitute_qinv()
    return FusionVector(out)


def _as_count(x: Fraction) -> int:
    if x.denominator != 1 or x < 0:
        raise ArithmeticError(f"closed form produced a non-count value {x}")
    return int(x)


def closed_form_counts(mp: ModelParams, n) -> FusionVector:
    """Closed-form multiplicities known for p = 2 and p = 3."""
    n = check_n(mp, n)
    F = Fraction
    p = mp.p
    out: dict = {}
    if p == 2:
        (N,) = n
        if N < 1:
            raise ParameterError("the p=2 closed form holds for n >= 1")
        sg = (-1) ** N
        out[obj(mp, "X", 2)] = F(2) ** (N - 2) * (1 - sg)
        out[obj(mp, "P", 1)] = F(2) ** (N - 3) * (1 + sg)
    elif p == 3:
        N, M = n
        sg = (-1) ** N
        X1, X2, X3 = obj(mp, "X", 1), obj(mp, "X", 2), obj(mp, "X", 3)
        P1, P2 = obj(mp, "P", 1), obj(mp, "P", 2)
        if M == 0:
            out[X1] = F(1 + sg, 2)
            out[X2] = F(1 - sg, 2)
            out[X3] = F(2 ** N + sg * (3 * N - 1), 9)
            out[P1] = F(2 ** (N + 3) + sg * (19 - 48 * N + 18 * N * N) - 27, 216)
            out[P2] = F(2 ** (N + 4) + sg * (11 + 12 * N - 18 * N * N) - 27, 216)
        elif M == 1:
            out[X3] = F(2, 3) * (F(2) ** (N - 1) + sg)
            out[P1] = F(2 ** N + sg * (3 * N - 1), 9)
            out[P2] = F(2 ** (N + 1) - sg * (3 * N + 2), 9)
        elif M == 2:
            out[X3] = F(2 ** N)
            out[P1] = F(2, 3) * (F(2) ** (N - 1) + sg)
            out[P2] = F(2, 3) * (2 ** N - sg)
        else:
            out[X3] = F(2 ** N * 3 ** (M - 2))
            out[P1] = F(2 ** N * 3 ** (M - 3))
            out[P2] = F(2 ** (N + 1) * 3 ** (M - 3))
    else:
        raise ParameterError(f"closed forms are available for p = 2, 3 only, not {p}")
    return FusionVector({o: _as_count(c) for o, c in out.items()})
