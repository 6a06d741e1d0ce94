"""Command-line front end: ``char``, ``kostka``, ``fuse`` and ``verify``.

Every command first builds a JSON-ready payload.  Output in either format
is rendered from that payload, and the cache stores the payload, so a cache
hit prints exactly what a fresh computation would.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from . import __version__
from .characters import (chi_fermionic, chi_irreducible, chi_w, psi_projective,
                         xi_coinvariant, xi_verma)
from .errors import ModelMismatchError, ParameterError, TruncationError
from .fusion import (FusionVector, closed_form_counts, decompose_power,
                     graded_decomposition)
from .kostka import kbar, khat, khat_felder, khat_steinberg
from .model import build_model, u_of_n, v_irreducible, v_of_u
from .series import QPoly, QSeries
from .verify import (SUITES, VerificationReport, verify_felder,
                     verify_fermionic_vs_theta, verify_ising, verify_limits,
                     verify_main_identity, verify_supernomial_identity)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_TRUNC = 0, 1, 2, 3

CHAR_KINDS = ("irreducible", "w-plus", "w-minus", "fermionic", "projective",
              "verma", "coinvariant")
KOSTKA_KINDS = ("khat", "kbar", "felder", "steinberg")
FUSE_MODES = ("graded", "ungraded", "closed-form")


# ----- serialization -------------------------------------------------------

def to_jsonable(value: Any) -> Any:
    """Convert library values to plain JSON data.

    QPoly becomes its list of records, QSeries a dict with den, trunc and
    terms, FusionVector a list of {object, multiplicity}.
    """
    if isinstance(value, QPoly):
        return value.records()
    if isinstance(value, QSeries):
        return {"den": value.den, "trunc": value.trunc, "terms": value.records()}
    if isinstance(value, FusionVector):
        return [{"object": str(o), "multiplicity": to_jsonable(c)}
                for o, c in value.items()]
    if isinstance(value, VerificationReport):
        d = value.to_dict()
        d.pop("elapsed")  # timing would break byte-identical output
        return d
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    return value


def emit_json(value: Any) -> str:
    return json.dumps(to_jsonable(value), sort_keys=True, indent=2) + "\n"


def parse_poly(records, den: int) -> QPoly:
    return QPoly.from_records(records, den)


def parse_series(obj: dict) -> QSeries:
    return QSeries.from_records(obj["terms"], int(obj["den"]), int(obj["trunc"]))


# ----- text rendering ------------------------------------------------------

def _qpow(num: int, den: int) -> str:
    return str(Fraction(num, den))


def _poly_text(records, den: int) -> str:
    if not records:
        return "0"
    parts = []
    for r in records:
        mono = []
        if r["qnum"]:
            mono.append(f"q^{_qpow(r['qnum'], den)}")
        if r["z"]:
            mono.append(f"z^{r['z']}")
        c = r["c"]
        parts.append(c if not mono else ("" if c == "1" else c + "*") + "*".join(mono))
    return " + ".join(parts).replace("+ -", "- ")


def _table(rows: list[list[str]], header: list[str]) -> str:
    widths = [max(len(x) for x in col) for col in zip(header, *rows)]
    fmt = "  ".join(f"{{:>{w}}}" for w in widths)
    lines = [fmt.format(*header), fmt.format(*("-" * w for w in widths))]
    lines += [fmt.format(*r) for r in rows]
    return "\n".join(lines)


def render_text(payload: dict) -> str:
    den = payload.get("den")
    head = f"{payload['verb']}  " + "  ".join(
        f"{k}={v}" for k, v in sorted(payload["params"].items()))
    result = payload["result"]
    out = [head]
    verb = payload["verb"]
    if verb == "char":
        out.append(f"valid below q^{_qpow(result['trunc'], den)} "
                   f"(trunc {result['trunc']} in units of 1/{den})")
        rows = [[_qpow(r["qnum"], den), str(r["z"]), r["c"]] for r in result["terms"]]
        out.append(_table(rows, ["q-power", "z-power", "coeff"]))
    elif verb == "kostka":
        rows = [[_qpow(r["qnum"], den), str(r["z"]), r["c"]] for r in result]
        out.append(_table(rows, ["q-power", "z-power", "coeff"]) if rows else "0")
    elif verb == "fuse":
        rows = [[e["object"], (_poly_text(e["multiplicity"], den)
                               if isinstance(e["multiplicity"], list)
                               else str(e["multiplicity"]))]
                for e in result]
        out.append(_table(rows, ["object", "multiplicity"]))
    else:
        for k in ("suite", "tier", "status", "checked", "detail", "first_discrepancy"):
            v = result.get(k)
            if k == "first_discrepancy" and v:
                d = result["params"].get("den", den)
                v = (f"q^{_qpow(v[0], d)} z^{v[1]}: {v[2]} vs {v[3]}" if d else str(v))
            out.append(f"{k:>18}: {v}")
    return "\n".join(out) + "\n"


# ----- argument handling ---------------------------------------------------

class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would call sys.exit
        raise _UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def _vector(text: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")
    if any(v < 0 for v in vals):
        raise argparse.ArgumentTypeError("vector entries must be non-negative")
    return vals


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="logcoinv", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def common(sp, need_p=True):
        sp.add_argument("--p", type=int, required=need_p, help="model parameter p >= 2")
        sp.add_argument("--format", choices=("json", "text"), default="json")
        sp.add_argument("--cache-dir", type=Path, default=None)

    sp = sub.add_parser("char", help="character series")
    common(sp)
    sp.add_argument("--kind", choices=CHAR_KINDS, required=True)
    sp.add_argument("--s", type=int)
    sp.add_argument("--n", type=_vector, help="n for the fermionic kind (induced module)")
    sp.add_argument("--m", type=_vector, help="m for the coinvariant kind")
    sp.add_argument("--sign", choices=("+", "-"), default="+")
    sp.add_argument("--trunc", type=_positive, required=True,
                    help="truncation order in units of 1/(4p)")

    sp = sub.add_parser("kostka", help="multiplicity polynomials")
    common(sp)
    sp.add_argument("--kind", choices=KOSTKA_KINDS, default="khat")
    sp.add_argument("--s", type=int)
    sp.add_argument("--n", type=_vector, required=True)

    sp = sub.add_parser("fuse", help="decompose X_2^n2 ... X_p^np")
    common(sp)
    sp.add_argument("--n", type=_vector, required=True)
    sp.add_argument("--mode", choices=FUSE_MODES, default="graded")

    sp = sub.add_parser("verify", help="run a verification suite")
    common(sp, need_p=False)
    sp.add_argument("--suite", choices=sorted(SUITES), required=True)
    sp.add_argument("--s", type=int)
    sp.add_argument("--n", type=_vector)
    sp.add_argument("--m", type=_vector)
    sp.add_argument("--trunc", type=_positive)
    sp.add_argument("--direction", type=int, default=0)
    sp.add_argument("--steps", type=int, default=4)
    sp.add_argument("--m-max", type=int, default=10)
    return parser


def _need(args, *names):
    for name in names:
        if getattr(args, name, None) is None:
            raise ParameterError(f"--{name.replace('_', '-')} is required here")


def _compute(args) -> tuple[dict, Any]:
    """Return (params, result value) for the parsed command."""
    verb = args.verb
    if verb == "verify" and args.suite == "ising":
        args.p = 4
    _need(args, "p")
    mp = build_model(args.p)
    params: dict[str, Any] = {"p": args.p}
    if verb == "char":
        kind = args.kind
        params.update(kind=kind, trunc=args.trunc)
        if kind == "fermionic":
            if args.n is not None:
                params["n"] = list(args.n)
                return params, chi_fermionic(mp, v_of_u(mp, u_of_n(mp, args.n)), args.trunc)
            _need(args, "s")
            params["s"] = args.s
            return params, chi_fermionic(mp, v_irreducible(mp, args.s), args.trunc)
        _need(args, "s")
        params["s"] = args.s
        if kind == "irreducible":
            return params, chi_irreducible(mp, args.s, args.trunc)
        if kind in ("w-plus", "w-minus"):
            return params, chi_w(mp, args.s, "+" if kind == "w-plus" else "-", args.trunc)
        if kind == "projective":
            return params, psi_projective(mp, args.s, args.trunc)
        params["sign"] = args.sign
        if kind == "verma":
            return params, xi_verma(mp, args.s, args.sign, args.trunc)
        _need(args, "m")
        params["m"] = list(args.m)
        return params, xi_coinvariant(mp, args.s, args.m, args.trunc, args.sign)
    if verb == "kostka":
        params.update(kind=args.kind, n=list(args.n))
        if args.kind == "steinberg":
            return params, khat_steinberg(mp, args.n)
        _need(args, "s")
        params["s"] = args.s
        fn = {"khat": khat, "kbar": kbar, "felder": khat_felder}[args.kind]
        return params, fn(mp, args.s, args.n)
    if verb == "fuse":
        params.update(n=list(args.n), mode=args.mode)
        fn = {"graded": graded_decomposition, "ungraded": decompose_power,
              "closed-form": closed_form_counts}[args.mode]
        return params, fn(mp, args.n)
    suite = args.suite
    params["suite"] = suite
    if suite == "main-identity":
        _need(args, "n", "trunc")
        params.update(n=list(args.n), trunc=args.trunc)
        return params, verify_main_identity(mp, args.n, args.trunc)
    if suite == "fermionic-theta":
        _need(args, "s", "trunc")
        params.update(s=args.s, trunc=args.trunc)
        return params, verify_fermionic_vs_theta(mp, args.s, args.trunc)
    if suite == "supernomial":
        _need(args, "m")
        params["m"] = list(args.m)
        return params, verify_supernomial_identity(mp, args.m)
    if suite == "felder":
        _need(args, "s", "m")
        params.update(s=args.s, m=list(args.m))
        return params, verify_felder(mp, args.s, args.m)
    if suite == "limits":
        _need(args, "s", "trunc")
        params.update(s=args.s, direction=args.direction, steps=args.steps, trunc=args.trunc)
        return params, verify_limits(mp, args.s, args.direction, args.steps, args.trunc)
    params["m_max"] = args.m_max
    return params, verify_ising(args.m_max)


def _cache_key(verb: str, params: dict) -> str:
    blob = json.dumps({"verb": verb, "params": params, "version": __version__},
                      sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()


def _request_params(args) -> dict:
    # the cache key is built from the parsed flags, before any computation
    skip = {"format", "cache_dir"}
    return {k: (list(v) if isinstance(v, tuple) else v)
            for k, v in sorted(vars(args).items()) if k not in skip and v is not None}


def _payload(args) -> dict:
    params, value = _compute(args)
    return {"verb": args.verb, "params": params, "den": 4 * args.p,
            "result": to_jsonable(value)}


def _exit_code(payload: dict) -> int:
    if payload["verb"] == "verify":
        res = payload["result"]
        if res["status"] != "pass" and res["tier"] == "proven":
            return EXIT_FAIL
    return EXIT_OK


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        stderr.write(str(exc))
        return EXIT_USAGE
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    cache_file = None
    if args.cache_dir is not None:
        cache_file = args.cache_dir / (_cache_key(args.verb, _request_params(args)) + ".json")
    try:
        if cache_file is not None and cache_file.exists():
            payload = json.loads(cache_file.read_text())
        else:
            payload = _payload(args)
            if cache_file is not None:
                cache_file.parent.mkdir(parents=True, exist_ok=True)
                cache_file.write_text(emit_json(payload))
    except (ParameterError, ModelMismatchError) as exc:
        stderr.write(f"logcoinv: error: {exc}\n")
        return EXIT_USAGE
    except TruncationError as exc:
        stderr.write(f"logcoinv: truncation error: {exc}\n")
        return EXIT_TRUNC
    stdout.write(emit_json(payload) if args.format == "json" else render_text(payload))
    return _exit_code(payload)


def main() -> None:
    sys.exit(run())
