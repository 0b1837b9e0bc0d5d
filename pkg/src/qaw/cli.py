"""Command line entry point: ``qaw verify`` and ``qaw poly``."""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .qcore import DegenerateParameters, ParamPoint, big_point, fmt, little_point, screen_degeneracies, to_scalar
from .qjacobi import (BigParams, LittleParams, big_poly_rescaled, little_poly, qdiff_eigenvalue,
                      spectrum)
from .suites import SUITES, report_document, run

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2
CORRUPTIBLE = ("alpha", "beta", "gamma", "delta")


class ConfigError(Exception):
    pass


def _parse_seeds(text) -> list[int]:
    if isinstance(text, list):
        items = text
    else:
        items = [s for s in str(text).split(",") if s.strip()]
    try:
        seeds = [int(s) for s in items]
    except (TypeError, ValueError):
        raise ConfigError(f"seeds must be integers, got {text!r}") from None
    if not seeds:
        raise ConfigError("empty seed list")
    return seeds


def _load_config(path: str | None) -> dict:
    if not path:
        return {}
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    if not isinstance(data, dict):
        raise ConfigError("config must be a JSON object")
    return {k.replace("-", "_"): v for k, v in data.items()}


def _merge(args: argparse.Namespace, keys) -> dict:
    """Flags win over the config file, which wins over built-in defaults."""
    cfg = _load_config(args.config)
    unknown = set(cfg) - set(keys)
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    out = {}
    for key, default in keys.items():
        val = getattr(args, key, None)
        out[key] = val if val is not None else cfg.get(key, default)
    return out


def _emit(doc: dict, out: str | None):
    text = json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def cmd_verify(args: argparse.Namespace) -> int:
    opts = _merge(args, {"suite": "all", "seeds": None, "points": None, "n_max": 10,
                         "out": None, "corrupt": None, "jobs": 1})
    suite = opts["suite"]
    if suite != "all" and suite not in SUITES:
        raise ConfigError(f"unknown suite {suite!r}")
    if opts["seeds"] is not None:
        seeds = _parse_seeds(opts["seeds"])
    elif opts["points"] is not None:
        seeds = list(range(1, int(opts["points"]) + 1))
    else:
        seeds = [1, 2, 3]
    n_max = int(opts["n_max"])
    if n_max < 0:
        raise ConfigError("n-max must be non-negative")
    corrupt = opts["corrupt"]
    if corrupt is not None and corrupt not in CORRUPTIBLE:
        raise ConfigError(f"corrupt must be one of {CORRUPTIBLE}")
    suites = SUITES if suite == "all" else (suite,)
    try:
        reports = run(suites, seeds, n_max, corrupt, int(opts["jobs"]))
    except DegenerateParameters as exc:
        raise ConfigError(str(exc)) from None
    invocation = {"command": "verify", "suite": suite, "seeds": seeds, "n_max": n_max}
    if corrupt:
        invocation["corrupt"] = corrupt
    doc = report_document(reports, invocation)
    _emit(doc, opts["out"])
    failed = doc["summary"]["failed"]
    if failed:
        print(f"{failed} of {doc['summary']['total']} checks failed", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


def _scalar(name: str, value) -> Fraction:
    try:
        return to_scalar(value)
    except (ValueError, ZeroDivisionError, TypeError):
        raise ConfigError(f"--{name}: not a rational number: {value!r}") from None


def poly_document(family: str, n: int, a, b, t, c=0, u=None) -> dict:
    """Coefficients of the requested polynomial plus its eigenvalues.

    ``qdiff_eigenvalue`` belongs to the q-difference operator and needs only
    (a, b, t). ``a_n`` is the eigenvalue of the realized operator and is
    reported when ``u`` is given, at the forward-parametrized point.
    """
    a, b, c, t = map(to_scalar, (a, b, c, t))
    if t in (0, 1, -1):
        raise DegenerateParameters("t must avoid 0 and +-1")
    if n < 0:
        raise DegenerateParameters("n must be non-negative")
    if u is not None:
        u = to_scalar(u)
        if family == "little":
            p = little_point(t, u, a, b)
        else:
            if b == 0:
                raise DegenerateParameters("b = 0")
            p = big_point(t, u, a, b, c)
        if not screen_degeneracies(p, max(n, 1)):
            raise DegenerateParameters("parameters fail the degeneracy screen")
    else:
        p = ParamPoint(t=t, u=Fraction(1))
    if family == "little":
        poly = little_poly(n, LittleParams(a, b), p)
        params = {"a": fmt(a), "b": fmt(b)}
    else:
        poly = big_poly_rescaled(n, BigParams(a, b, c), p)
        params = {"a": fmt(a), "b": fmt(b), "c": fmt(c)}
    doc = {
        "family": family, "n": n, "params": params, "t": fmt(t), "q": fmt(p.q),
        "coefficients": poly.to_records(),
        "qdiff_eigenvalue": fmt(qdiff_eigenvalue(n, a * b, p)),
    }
    if u is not None:
        doc["u"] = fmt(u)
        doc["a_n"] = fmt(spectrum(n, p, a * b))
    return doc


def cmd_poly(args: argparse.Namespace) -> int:
    opts = _merge(args, {"family": None, "n": None, "a": None, "b": None, "c": "0",
                         "t": None, "u": None, "out": None})
    for key in ("family", "n", "a", "b", "t"):
        if opts[key] is None:
            raise ConfigError(f"missing --{key}")
    if opts["family"] not in ("little", "big_rescaled"):
        raise ConfigError(f"unknown family {opts['family']!r}")
    vals = {k: _scalar(k, opts[k]) for k in ("a", "b", "c", "t")}
    u = _scalar("u", opts["u"]) if opts["u"] is not None else None
    try:
        doc = poly_document(opts["family"], int(opts["n"]), u=u, **vals)
    except (DegenerateParameters, ZeroDivisionError) as exc:
        raise ConfigError(f"degenerate parameters: {exc or 'division by zero'}") from None
    _emit(doc, opts["out"])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qaw", description=__doc__)
    parser.add_argument("--version", action="version", version=f"qaw {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites and write a JSON report")
    v.add_argument("--suite", choices=("all",) + SUITES)
    v.add_argument("--seeds", help="comma separated integer seeds (default 1,2,3)")
    v.add_argument("--points", type=int, help="use seeds 1..N")
    v.add_argument("--n-max", dest="n_max", type=int, help="largest polynomial degree (default 10)")
    v.add_argument("--out", help="report path (default stdout)")
    v.add_argument("--jobs", type=int, help="worker processes (default 1)")
    v.add_argument("--corrupt", choices=CORRUPTIBLE,
                   help="debug: perturb one coefficient of the A-from-B tridiagonal solution")
    v.add_argument("--config", help="JSON file with the same keys as the flags")
    v.set_defaults(func=cmd_verify)

    p = sub.add_parser("poly", help="emit little or big (rescaled) q-Jacobi coefficients")
    p.add_argument("--family", choices=("little", "big_rescaled"))
    p.add_argument("--n", type=int)
    p.add_argument("--a")
    p.add_argument("--b")
    p.add_argument("--c", help="third big parameter (default 0)")
    p.add_argument("--t", help="q^(1/2)")
    p.add_argument("--u", help="q^nu; enables the a_n eigenvalue")
    p.add_argument("--out", help="output path (default stdout)")
    p.add_argument("--config", help="JSON file with the same keys as the flags")
    p.set_defaults(func=cmd_poly)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"qaw: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
