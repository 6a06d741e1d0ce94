"""Verification suites: each compares two independent evaluations exactly.

Suites in the "proven" tier check identities with proofs; the "conjecture"
tier holds equalities that rest on a conjectured exactness statement, so a
failure there is a finding rather than a bug.
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from typing import Any, Callable

from .characters import (chi_fermionic, chi_irreducible, chi_w, psi_projective,
                         v_irreducible)
from .errors import ParameterError
from .kostka import (kbar, khat, khat_felder, khat_s_super, khat_steinberg,
                     supernomial_identity_sides)
from .model import ModelParams, build_model, check_n, u_of_n, v_of_u
from .qcomb import weighted_size
from .series import QPoly, QSeries, qs_mul_poly

PROVEN, CONJECTURE = "proven", "conjecture"


@dataclass
class VerificationReport:
    suite: str
    params: dict[str, Any]
    status: str
    first_discrepancy: tuple[int, int, int, int] | None = None
    elapsed: float = 0.0
    tier: str = PROVEN
    detail: str = ""
    checked: int = 0

    def __post_init__(self):
        if self.status == "fail" and self.first_discrepancy is None and not self.detail:
            raise ValueError("a failing report needs a discrepancy or a detail")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        d["first_discrepancy"] = (list(self.first_discrepancy)
                                  if self.first_discrepancy else None)
        return d


@dataclass
class _Run:
    suite: str
    params: dict
    tier: str = PROVEN
    start: float = field(default_factory=time.perf_counter)
    checked: int = 0

    def done(self, disc=None, detail: str = "") -> VerificationReport:
        status = "pass" if disc is None and not detail else "fail"
        return VerificationReport(self.suite, self.params, status, disc,
                                  time.perf_counter() - self.start, self.tier,
                                  detail, self.checked)


def poly_discrepancy(a: QPoly, b: QPoly):
    """Lowest (qexp, zexp, a_c, b_c) where two polynomials differ, else None."""
    fa, fb = a.flat, b.flat
    for k in sorted(set(fa) | set(fb)):
        if fa.get(k, 0) != fb.get(k, 0):
            return (k[0], k[1], fa.get(k, 0), fb.get(k, 0))
    return None


def main_identity_rhs(mp: ModelParams, n, trunc: int) -> QSeries:
    """sum_s Kbar_s(1/q) chi_s + sum_s Khat_s(1/q, z) psi_s, valid below trunc.

    Each character is computed far enough beyond ``trunc`` to absorb the
    negative powers of q in its inverted multiplicity polynomial.
    """
    p = mp.p
    total = QSeries({}, mp.den, trunc, 0)
    for s in range(1, p + 1):
        parts: list[tuple[QPoly, Callable]] = []
        if s < p:
            parts.append((kbar(mp, s, n).substitute_qinv(), chi_irreducible))
        parts.append((khat(mp, s, n).substitute_qinv(), psi_projective))
        for k, char in parts:
            kmin = k.min_exponent()
            if kmin is None:
                continue
            need = trunc - min(kmin, 0)
            total = total + qs_mul_poly(char(mp, s, need), k, order=trunc)
    return total


def verify_main_identity(mp: ModelParams, n, trunc: int) -> VerificationReport:
    n = check_n(mp, n)
    run = _Run("main-identity", {"p": mp.p, "n": list(n), "trunc": trunc})
    lhs = chi_fermionic(mp, v_of_u(mp, u_of_n(mp, n)), trunc)
    rhs = main_identity_rhs(mp, n, trunc)
    run.checked = 1
    return run.done(lhs.first_discrepancy(rhs, upto=trunc))


def verify_fermionic_vs_theta(mp: ModelParams, s: int, trunc: int) -> VerificationReport:
    run = _Run("fermionic-theta", {"p": mp.p, "s": s, "trunc": trunc})
    a = chi_fermionic(mp, v_irreducible(mp, s), trunc)
    b = chi_irreducible(mp, s, trunc)
    run.checked = 1
    return run.done(a.first_discrepancy(b))


def verify_supernomial_identity(mp: ModelParams, m) -> VerificationReport:
    """All indices a with |a| <= |m| + 2, so a few vanishing cases are included."""
    m = check_n(mp, m)
    if m[-1] < 1:
        raise ParameterError("the identity needs m_p >= 1")
    run = _Run("supernomial", {"p": mp.p, "m": list(m)})
    size = weighted_size(m)
    for a2 in range(-size - 2, size + 3):
        lhs, rhs = supernomial_identity_sides(mp, m, a2)
        run.checked += 1
        disc = poly_discrepancy(lhs, rhs)
        if disc:
            return run.done(disc, f"index a={a2}")
    return run.done()


def verify_felder(mp: ModelParams, s: int, m) -> VerificationReport:
    """Alternating-sum forms of K-hat against the direct Gaussian-binomial sum."""
    m = check_n(mp, m)
    run = _Run("felder", {"p": mp.p, "s": s, "m": list(m)}, tier=CONJECTURE)
    ref = khat(mp, s, m)
    forms: list[tuple[str, Callable[[], QPoly]]] = [
        ("double sum", lambda: khat_felder(mp, s, m))]
    if m[-1] > 0:
        forms.append(("single sum", lambda: khat_s_super(mp, s, m)))
    if s == mp.p:
        forms.append(("Steinberg double sum", lambda: khat_steinberg(mp, m, fast=False)))
        if m[-1] > 0:
            forms.append(("Steinberg single sum", lambda: khat_steinberg(mp, m)))
    for name, form in forms:
        run.checked += 1
        disc = poly_discrepancy(form(), ref)
        if disc:
            return run.done(disc, name)
    return run.done()


def limit_target(mp: ModelParams, s: int, n, trunc: int) -> tuple[str, QSeries]:
    """Expected large-n limit of K-hat_s for the parity class of n.

    With |n| weighted as sum (j-1) n_j: for even p the limit is chi_s when
    |n| + s is odd and 0 otherwise; for odd p it is chi_s^- (odd-dimensional
    multiplets) when |n| + s is odd and chi_s^+ otherwise.
    """
    odd = (weighted_size(n) + s) % 2 == 1
    if mp.p % 2 == 0:
        if odd:
            return "chi", chi_irreducible(mp, s, trunc)
        return "0", QSeries({}, mp.den, trunc, 0)
    sign = "-" if odd else "+"
    return "chi" + sign, chi_w(mp, s, sign, trunc)


def default_limit_start(mp: ModelParams, direction: int, trunc: int) -> int:
    # heads below q^Q settle once the weighted |n| passes about 2Q + 3
    q_units = -(-trunc // mp.den)
    weight = direction + 1
    return -(-(2 * q_units + 4) // weight)


def verify_limits(mp: ModelParams, s: int, direction: int, steps: int, trunc: int,
                  start: int | None = None) -> VerificationReport:
    """K-hat_s along n = N e_direction, N = start .. start+steps-1.

    ``direction`` is the 0-based position in n (0 is n_2).  Every head below
    ``trunc`` must equal the parity-dependent target, which also makes the
    heads in one parity class stable.
    """
    if not 0 <= direction < mp.p - 1:
        raise ParameterError(f"direction must lie in 0..{mp.p - 2}")
    if steps < 2:
        raise ParameterError("need at least two steps to see stabilization")
    if start is None:
        start = default_limit_start(mp, direction, trunc)
    run = _Run("limits", {"p": mp.p, "s": s, "direction": direction,
                          "steps": steps, "trunc": trunc, "start": start})
    for N in range(start, start + steps):
        n = [0] * (mp.p - 1)
        n[direction] = N
        k = khat(mp, s, n)
        head = QSeries({key: c for key, c in k.flat.items() if key[0] < trunc},
                       mp.den, trunc, 0)
        name, target = limit_target(mp, s, n, trunc)
        run.checked += 1
        disc = head.first_discrepancy(target)
        if disc:
            return run.done(disc, f"N={N}, expected {name}")
    return run.done()


# ----- p = 4: the Ising model --------------------------------------------

ISING_P = 4


def _prod(factors, den: int) -> QPoly:
    out = QPoly.one(den)
    for f in factors:
        out = out * f
    return out


def _factor(e: int, const: int, den: int) -> QPoly:
    # q^e + const
    return QPoly({(e, 0): 1, (0, 0): const}, den)


def ising_product(ell: int, m: int) -> QPoly:
    """Product formula for Kbar_{ell,(m,0,0)} at p = 4 (den 16)."""
    den = 4 * ISING_P
    if ell in (1, 3):
        if m % 2:
            return QPoly.zero(den)
        # factors q^{j - 1/2} + 1 and q^{j - 1/2} - 1, j = 1..m/2
        plus = _prod([_factor(8 * (2 * j - 1), 1, den) for j in range(1, m // 2 + 1)], den)
        minus = _prod([_factor(8 * (2 * j - 1), -1, den) for j in range(1, m // 2 + 1)], den)
        half = plus + minus if ell == 1 else plus - minus
        flat = half.flat
        if any(c % 2 for c in flat.values()):
            raise ArithmeticError("product difference is not even")
        shift = 2 * m * (m - 4) if ell == 1 else 2 * (m - 2) ** 2
        return QPoly({k: c // 2 for k, c in flat.items()}, den).shift(shift)
    if ell == 2:
        if m % 2 == 0:
            return QPoly.zero(den)
        prod = _prod([_factor(16 * j, 1, den) for j in range(1, (m - 1) // 2 + 1)], den)
        return prod.shift(2 * (m - 1) * (m - 3))
    raise ParameterError("ell must be 1, 2 or 3")


def ising_character(h: str, trunc: int) -> QSeries:
    """Ising characters from the infinite products, in units of q^(1/16).

    h = "0", "1/2": even / odd part of prod_{j>=1} (1 + q^{j-1/2}), so the
    latter starts at q^(1/2); h = "1/16": prod_{j>=1} (1 + q^j), without
    the q^(1/16) prefactor.
    """
    den = 4 * ISING_P
    if h in ("0", "1/2"):
        step, first = 16, 8
        want = 0 if h == "0" else 1
    elif h == "1/16":
        step, first, want = 16, 16, None
    else:
        raise ParameterError("h must be '0', '1/2' or '1/16'")
    # coefficients of the product, tracked with the number of factors used
    acc: dict[tuple[int, int], int] = {(0, 0): 1}
    e = first
    while e < trunc:
        nxt = dict(acc)
        for (x, k), c in acc.items():
            if x + e < trunc:
                key = (x + e, k + 1)
                nxt[key] = nxt.get(key, 0) + c
        acc = nxt
        e += step
    out: dict[tuple[int, int], int] = {}
    for (x, k), c in acc.items():
        if want is None or k % 2 == want:
            out[(x, 0)] = out.get((x, 0), 0) + c
    return QSeries(out, den, trunc, 0)


def ising_head(ell: int, m: int) -> tuple[QPoly, int, str]:
    """Shifted Kbar_{ell,(m,0,0)}, the exponent (units 1/16) below which it
    agrees with an infinite product, and the weight of that character.

    The finite product over m/2 factors is exact below q^{(m+1)/2}.  Since
    prod (q^{j-1/2} - 1) carries the sign (-1)^{m/2}, ell = 1 tends to
    chi_0 for m/2 even and to chi_{1/2} for m/2 odd; ell = 3 the other way.
    """
    mp = build_model(ISING_P)
    k = kbar(mp, ell, (m, 0, 0))
    window = 8 * (m + 1)
    if ell == 2:
        return k.shift(-2 * (m - 1) * (m - 3)), window, "1/16"
    flip = (m // 2) % 2
    if ell == 1:
        return k.shift(-2 * m * (m - 4)), window, ("1/2" if flip else "0")
    return k.shift(-2 * (m - 2) ** 2), window, ("0" if flip else "1/2")


def verify_ising(m_max: int, head_m: tuple[int, ...] | None = None) -> VerificationReport:
    """Kbar at p=4 against the product formulas, then the large-m heads."""
    mp = build_model(ISING_P)
    run = _Run("ising", {"p": ISING_P, "m_max": m_max})
    for m in range(0, m_max + 1):
        for ell in (1, 2, 3):
            run.checked += 1
            disc = poly_discrepancy(kbar(mp, ell, (m, 0, 0)), ising_product(ell, m))
            if disc:
                return run.done(disc, f"product formula ell={ell}, m={m}")
    if head_m is None:
        head_m = tuple(range(max(4, m_max - 3), m_max + 1))
    for m in head_m:
        for ell in (1, 2, 3):
            if (ell == 2) == (m % 2 == 0):
                continue
            head, window, h = ising_head(ell, m)
            target = ising_character(h, window)
            got = QSeries({k: c for k, c in head.flat.items() if k[0] < window},
                          head.den, window, 0)
            run.checked += 1
            disc = got.first_discrepancy(target)
            if disc:
                return run.done(disc, f"head ell={ell}, m={m}")
    return run.done()


SUITES = {
    "main-identity": verify_main_identity,
    "fermionic-theta": verify_fermionic_vs_theta,
    "supernomial": verify_supernomial_identity,
    "felder": verify_felder,
    "limits": verify_limits,
    "ising": verify_ising,
}
