"""Exact Laurent polynomials in z and Laurent series/polynomials in q.

q-exponents are integers counted in units of ``1/den``; for a model with
parameter p the denominator is ``4p``, which makes every exponent that shows
up in the characters an integer.  Coefficients are Python ints throughout.

Both :class:`QPoly` and :class:`QSeries` store a flat mapping
``(q_exponent, z_exponent) -> coefficient``.  The per-q view as
:class:`ZLaurent` coefficients is produced on demand.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .errors import ModelMismatchError, TruncationError


def _clean(d: Mapping) -> dict:
    return {k: v for k, v in d.items() if v}


class ZLaurent:
    """Laurent polynomial in z with integer coefficients."""

    __slots__ = ("_t",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        self._t = _clean(terms) if terms else {}

    @classmethod
    def monomial(cls, exponent: int = 0, coeff: int = 1) -> ZLaurent:
        return cls({exponent: coeff})

    @classmethod
    def symmetric(cls, r: int) -> ZLaurent:
        """``z^r + z^-r`` (or 1 for r = 0)."""
        if r == 0:
            return cls({0: 1})
        return cls({r: 1, -r: 1})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._t)

    def items(self):
        return self._t.items()

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self._t))

    def __getitem__(self, e: int) -> int:
        return self._t.get(e, 0)

    def __bool__(self) -> bool:
        return bool(self._t)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = ZLaurent.monomial(0, other)
        if not isinstance(other, ZLaurent):
            return NotImplemented
        return self._t == other._t

    def __hash__(self) -> int:
        return hash(frozenset(self._t.items()))

    def __add__(self, other) -> ZLaurent:
        if isinstance(other, int):
            other = ZLaurent.monomial(0, other)
        out = dict(self._t)
        for e, c in other._t.items():
            out[e] = out.get(e, 0) + c
        return ZLaurent(out)

    __radd__ = __add__

    def __neg__(self) -> ZLaurent:
        return ZLaurent({e: -c for e, c in self._t.items()})

    def __sub__(self, other) -> ZLaurent:
        return self + (-other)

    def __mul__(self, other) -> ZLaurent:
        if isinstance(other, int):
            return ZLaurent({e: c * other for e, c in self._t.items()})
        if not isinstance(other, ZLaurent):
            return NotImplemented
        out: dict[int, int] = defaultdict(int)
        for e1, c1 in self._t.items():
            for e2, c2 in other._t.items():
                out[e1 + e2] += c1 * c2
        return ZLaurent(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> ZLaurent:
        out = ZLaurent.monomial()
        for _ in range(n):
            out = out * self
        return out

    def eval_one(self) -> int:
        return sum(self._t.values())

    def conjugate(self) -> ZLaurent:
        return ZLaurent({-e: c for e, c in self._t.items()})

    def __repr__(self) -> str:
        if not self._t:
            return "ZLaurent(0)"
        parts = []
        for e in sorted(self._t, reverse=True):
            c = self._t[e]
            mono = "" if e == 0 else ("z" if e == 1 else f"z^{e}")
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return "ZLaurent(" + " + ".join(parts).replace("+ -", "- ") + ")"


def zl_add(a: ZLaurent, b: ZLaurent) -> ZLaurent:
    return a + b


def zl_mul(a: ZLaurent, b: ZLaurent) -> ZLaurent:
    return a * b


def zl_eval_one(a: ZLaurent) -> int:
    return a.eval_one()


def zl_conjugate(a: ZLaurent) -> ZLaurent:
    return a.conjugate()


class _QTerms:
    """Shared storage for q-graded objects with ZLaurent coefficients."""

    __slots__ = ("_t", "den")

    def _check_den(self, other: _QTerms) -> None:
        if self.den != other.den:
            raise ModelMismatchError(
                f"exponent denominators differ: {self.den} vs {other.den}")

    @property
    def flat(self) -> dict[tuple[int, int], int]:
        """Copy of the ``(q_exponent, z_exponent) -> coefficient`` map."""
        return dict(self._t)

    @property
    def terms(self) -> dict[int, ZLaurent]:
        grouped: dict[int, dict[int, int]] = defaultdict(dict)
        for (e, z), c in self._t.items():
            grouped[e][z] = c
        return {e: ZLaurent(grouped[e]) for e in sorted(grouped)}

    def exponents(self) -> list[int]:
        return sorted({e for e, _ in self._t})

    def is_zero(self) -> bool:
        return not self._t

    def records(self) -> list[dict]:
        """JSON-ready records sorted by (q exponent, z exponent)."""
        return [{"qnum": e, "z": z, "c": str(self._t[(e, z)])}
                for e, z in sorted(self._t)]

    @staticmethod
    def _parse_records(records: Iterable[Mapping]) -> dict:
        out = {}
        for r in records:
            out[(int(r["qnum"]), int(r["z"]))] = int(r["c"])
        return out

    def q_exponent(self, e: int) -> Fraction:
        return Fraction(e, self.den)


class QPoly(_QTerms):
    """Finite Laurent polynomial in q^(1/den) with ZLaurent coefficients."""

    __slots__ = ()

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None,
                 den: int = 1):
        self._t = _clean(terms) if terms else {}
        self.den = den

    @classmethod
    def zero(cls, den: int = 1) -> QPoly:
        return cls({}, den)

    @classmethod
    def one(cls, den: int = 1) -> QPoly:
        return cls({(0, 0): 1}, den)

    @classmethod
    def monomial(cls, qexp: int, zexp: int = 0, coeff: int = 1,
                 den: int = 1) -> QPoly:
        return cls({(qexp, zexp): coeff}, den)

    @classmethod
    def from_qlist(cls, coeffs: Iterable[int], den: int = 1,
                   step: int | None = None, shift: int = 0) -> QPoly:
        """Build ``sum_i coeffs[i] q^(shift + i*step)`` (z-free)."""
        step = den if step is None else step
        return cls({(shift + i * step, 0): c for i, c in enumerate(coeffs)},
                   den)

    @classmethod
    def from_zlaurent(cls, zl: ZLaurent, qexp: int = 0, den: int = 1) -> QPoly:
        return cls({(qexp, z): c for z, c in zl.items()}, den)

    @classmethod
    def from_records(cls, records: Iterable[Mapping], den: int) -> QPoly:
        return cls(cls._parse_records(records), den)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self._t == ({(0, 0): other} if other else {})
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.den == other.den and self._t == other._t

    def __hash__(self) -> int:
        return hash((self.den, frozenset(self._t.items())))

    def __bool__(self) -> bool:
        return bool(self._t)

    def __add__(self, other) -> QPoly:
        if isinstance(other, int):
            other = QPoly.monomial(0, 0, other, self.den)
        self._check_den(other)
        out = dict(self._t)
        for k, c in other._t.items():
            out[k] = out.get(k, 0) + c
        return QPoly(out, self.den)

    __radd__ = __add__

    def __neg__(self) -> QPoly:
        return QPoly({k: -c for k, c in self._t.items()}, self.den)

    def __sub__(self, other) -> QPoly:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return QPoly({k: c * other for k, c in self._t.items()}, self.den)
        if isinstance(other, ZLaurent):
            other = QPoly.from_zlaurent(other, 0, self.den)
        if isinstance(other, QSeries):
            return qs_mul_poly(other, self)
        if not isinstance(other, QPoly):
            return NotImplemented
        self._check_den(other)
        out: dict[tuple[int, int], int] = defaultdict(int)
        for (e1, z1), c1 in self._t.items():
            for (e2, z2), c2 in other._t.items():
                out[(e1 + e2, z1 + z2)] += c1 * c2
        return QPoly(out, self.den)

    __rmul__ = __mul__

    def shift(self, qexp: int, zexp: int = 0) -> QPoly:
        """Multiply by the monomial ``q^qexp z^zexp``."""
        return QPoly({(e + qexp, z + zexp): c for (e, z), c in self._t.items()},
                     self.den)

    def substitute_qinv(self) -> QPoly:
        return QPoly({(-e, z): c for (e, z), c in self._t.items()}, self.den)

    def conjugate_z(self) -> QPoly:
        return QPoly({(e, -z): c for (e, z), c in self._t.items()}, self.den)

    def rescale(self, den: int) -> QPoly:
        """Re-express exponents over a multiple of the current denominator."""
        if den % self.den:
            raise ModelMismatchError(f"{den} is not a multiple of {self.den}")
        f = den // self.den
        return QPoly({(e * f, z): c for (e, z), c in self._t.items()}, den)

    def z_coefficient(self, r: int) -> QPoly:
        return QPoly({(e, 0): c for (e, z), c in self._t.items() if z == r},
                     self.den)

    def at_z_one(self) -> QPoly:
        out: dict[tuple[int, int], int] = defaultdict(int)
        for (e, _), c in self._t.items():
            out[(e, 0)] += c
        return QPoly(out, self.den)

    def eval_one(self) -> int:
        """Value at q = z = 1."""
        return sum(self._t.values())

    def coeff(self, qexp: int) -> ZLaurent:
        return ZLaurent({z: c for (e, z), c in self._t.items() if e == qexp})

    def min_exponent(self) -> int | None:
        return min((e for e, _ in self._t), default=None)

    def max_exponent(self) -> int | None:
        return max((e for e, _ in self._t), default=None)

    def __repr__(self) -> str:
        return f"QPoly({_format_terms(self._t, self.den)}, den={self.den})"


def qpoly_substitute_qinv(k: QPoly) -> QPoly:
    return k.substitute_qinv()


class QSeries(_QTerms):
    """Laurent series in q^(1/den), known exactly below ``trunc``.

    Coefficients at exponents ``>= trunc`` are unknown; asking for them
    raises :class:`TruncationError`.  ``min_exponent`` is a lower bound for
    the support and defaults to the smallest stored exponent.
    """

    __slots__ = ("trunc", "min_exponent")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None, den: int,
                 trunc: int, min_exponent: int | None = None):
        self.den = den
        self.trunc = trunc
        self._t = {k: c for k, c in (terms or {}).items() if c and k[0] < trunc}
        if min_exponent is None:
            min_exponent = min((e for e, _ in self._t), default=trunc)
        self.min_exponent = min_exponent
        if any(e < min_exponent for e, _ in self._t):
            raise ValueError("stored term below declared min_exponent")

    @classmethod
    def from_poly(cls, k: QPoly, trunc: int) -> QSeries:
        return cls(k._t, k.den, trunc)

    @classmethod
    def one(cls, den: int, trunc: int) -> QSeries:
        return cls({(0, 0): 1}, den, trunc, 0)

    @classmethod
    def from_records(cls, records: Iterable[Mapping], den: int,
                     trunc: int) -> QSeries:
        return cls(cls._parse_records(records), den, trunc)

    def coeff(self, qexp: int) -> ZLaurent:
        if qexp >= self.trunc:
            raise TruncationError(
                f"coefficient of q^({qexp}/{self.den}) lies beyond the "
                f"truncation order {self.trunc}/{self.den}", required=qexp + 1)
        return ZLaurent({z: c for (e, z), c in self._t.items() if e == qexp})

    def truncate(self, trunc: int) -> QSeries:
        if trunc > self.trunc:
            raise TruncationError(
                f"cannot extend truncation from {self.trunc} to {trunc}",
                required=trunc)
        return QSeries(self._t, self.den, trunc,
                       min(self.min_exponent, trunc))

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return (self.den == other.den and self.trunc == other.trunc
                and self._t == other._t)

    __hash__ = None

    def _binary_trunc(self, other: QSeries) -> int:
        self._check_den(other)
        return min(self.trunc, other.trunc)

    def __add__(self, other) -> QSeries:
        if isinstance(other, QPoly):
            other = QSeries.from_poly(other, self.trunc)
        t = self._binary_trunc(other)
        out = {k: c for k, c in self._t.items() if k[0] < t}
        for k, c in other._t.items():
            if k[0] < t:
                out[k] = out.get(k, 0) + c
        return QSeries(out, self.den, t,
                       min(self.min_exponent, other.min_exponent))

    __radd__ = __add__

    def __neg__(self) -> QSeries:
        return QSeries({k: -c for k, c in self._t.items()}, self.den,
                       self.trunc, self.min_exponent)

    def __sub__(self, other) -> QSeries:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return QSeries({k: c * other for k, c in self._t.items()},
                           self.den, self.trunc, self.min_exponent)
        if isinstance(other, ZLaurent):
            other = QPoly.from_zlaurent(other, 0, self.den)
        if isinstance(other, QPoly):
            return qs_mul_poly(self, other)
        if isinstance(other, QSeries):
            return qs_mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def shift(self, qexp: int, zexp: int = 0) -> QSeries:
        return QSeries({(e + qexp, z + zexp): c for (e, z), c in self._t.items()},
                       self.den, self.trunc + qexp, self.min_exponent + qexp)

    def conjugate_z(self) -> QSeries:
        return QSeries({(e, -z): c for (e, z), c in self._t.items()},
                       self.den, self.trunc, self.min_exponent)

    def at_z_one(self) -> QSeries:
        out: dict[tuple[int, int], int] = defaultdict(int)
        for (e, _), c in self._t.items():
            out[(e, 0)] += c
        return QSeries(out, self.den, self.trunc, self.min_exponent)

    def filter_z(self, pred) -> QSeries:
        return QSeries({k: c for k, c in self._t.items() if pred(k[1])},
                       self.den, self.trunc, self.min_exponent)

    def first_discrepancy(self, other: QSeries, upto: int | None = None):
        """Lowest ``(qexp, zexp, self_c, other_c)`` where the two differ.

        Only exponents below ``upto`` (default: the common truncation) are
        compared.  Returns None if they agree there.
        """
        t = self._binary_trunc(other)
        if upto is not None:
            if upto > t:
                raise TruncationError(
                    f"comparison up to {upto} exceeds valid window {t}",
                    required=upto)
            t = upto
        keys = {k for k in self._t if k[0] < t} | {k for k in other._t if k[0] < t}
        for k in sorted(keys):
            a, b = self._t.get(k, 0), other._t.get(k, 0)
            if a != b:
                return (k[0], k[1], a, b)
        return None

    def __repr__(self) -> str:
        return (f"QSeries({_format_terms(self._t, self.den)} + "
                f"O(q^{Fraction(self.trunc, self.den)}), den={self.den})")


def qs_mul(a: QSeries, b: QSeries) -> QSeries:
    """Product of two truncated series, keeping only certified terms."""
    a._check_den(b)
    t = min(a.trunc + b.min_exponent, b.trunc + a.min_exponent)
    out: dict[tuple[int, int], int] = defaultdict(int)
    for (e1, z1), c1 in a._t.items():
        lim = t - e1
        for (e2, z2), c2 in b._t.items():
            if e2 < lim:
                out[(e1 + e2, z1 + z2)] += c1 * c2
    return QSeries(out, a.den, t, a.min_exponent + b.min_exponent)


def qs_mul_poly(a: QSeries, k: QPoly, order: int | None = None) -> QSeries:
    """Multiply a truncated series by an exact polynomial.

    A negative minimum exponent in ``k`` lowers the valid truncation order.
    If ``order`` is given the result must be valid strictly below it,
    otherwise :class:`TruncationError` reports the truncation ``a`` needed.
    """
    a._check_den(k)
    kmin = k.min_exponent()
    if kmin is None:
        return QSeries({}, a.den, order if order is not None else a.trunc)
    t = a.trunc + kmin
    if order is not None:
        if t < order:
            raise TruncationError(
                f"series known below {a.trunc}/{a.den} gives a product valid "
                f"only below {t}/{a.den}; need {order - kmin}/{a.den}",
                required=order - kmin)
        t = order
    out: dict[tuple[int, int], int] = defaultdict(int)
    for (e2, z2), c2 in k._t.items():
        lim = t - e2
        for (e1, z1), c1 in a._t.items():
            if e1 < lim:
                out[(e1 + e2, z1 + z2)] += c1 * c2
    return QSeries(out, a.den, t, a.min_exponent + kmin)


def _format_terms(t: Mapping[tuple[int, int], int], den: int) -> str:
    if not t:
        return "0"
    parts = []
    for e, z in sorted(t):
        c = t[(e, z)]
        mono = []
        if e:
            mono.append(f"q^({Fraction(e, den)})")
        if z:
            mono.append(f"z^({z})")
        parts.append("*".join([str(c)] + mono))
    return " + ".join(parts)
