"""Acceptance criteria, one printed PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py`` (lines appear in the terminal summary)
or ``python tests/test_acceptance.py``.
"""
from __future__ import annotations

import json
import subprocess
import sys
import tempfile
import time
from pathlib import Path

import pytest

from qaw.qcore import sample_point
from qaw.qjacobi import (LittleParams, big_dictionary, big_operator, big_poly_rescaled, bidiag_big, bidiag_little,
                         eigenfunction_f, expand_little, little_dictionary, little_from_big_residual,
                         little_operator, little_poly, phi32_little, qdiff_residual_big,
                         qdiff_residual_little, w0_spectrum)
from qaw.skewring import LaurentPoly
from qaw.tridiag import (big_from_little, coeffs_A_from_B, one_sided_point, residual_A_from_B,
                         residual_B_from_A, tridiag_A_from_B, tridiag_B_from_A)
from qaw.uqsl2 import (aw_residuals, build_G1, build_W, chevalley, equitable_residuals, g_coeffs,
                       g_reconstruct, reduced_residuals, verify_chevalley, verify_equitable_relations)

SEEDS = (1, 2, 3)
N = 10


def _points(profile):
    return [sample_point(s, profile) for s in SEEDS]


LINES: list[str] = []


def _report(num: int, title: str, ok: bool, detail: str = "") -> bool:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {title}" + (f" ({detail})" if detail else "")
    print(line)
    LINES.append(line)
    return ok


def criterion_1() -> bool:
    start = time.perf_counter()
    reports = [r for p in _points("general") for r in verify_chevalley(p)]
    elapsed = time.perf_counter() - start
    ok = all(r.passed for r in reports) and elapsed < 1.0
    return _report(1, "Chevalley relations and Casimir scalar, 3 points, < 1 s", ok,
                   f"{len(reports)} checks in {elapsed:.3f} s")


def criterion_2() -> bool:
    ok = True
    for p in _points("general"):
        g = chevalley(p)
        W0, W1 = build_W(p, g)
        ok &= (build_G1(W0, W1) - g_reconstruct(g, g_coeffs(p))).is_zero()
    return _report(2, "G1 equals its g-table reconstruction at 3 general points", ok)


def criterion_3() -> bool:
    ok = all(r.is_zero() for p in _points("general") for r in aw_residuals(p).values())
    for profile in ("little", "big"):
        ok &= all(r.is_zero() for p in _points(profile) for r in reduced_residuals(p).values())
    return _report(3, "AW relations (general) and reduced relations (little, big)", ok)


def criterion_4() -> bool:
    ok = True
    for p in _points("general") + _points("equitable"):
        ok &= all(r.passed for r in verify_equitable_relations(p))
        ok &= all(r.is_zero() for r in equitable_residuals(p).values())
    return _report(4, "equitable relations, AW relations of A, B, C and their Chevalley forms", ok)


def criterion_5() -> bool:
    ok = True
    for p in _points("little"):
        lp = little_dictionary(p)
        G = little_operator(p)
        g = g_coeffs(p)
        for n in range(N + 1):
            y = little_poly(n, lp, p)
            a_n = g.g5 * p.u**2 * (p.q ** (-2 * n) + lp.a * lp.b * p.q ** (2 * n + 2)) + g.g6
            ok &= G.apply(y) == y * a_n
            ok &= qdiff_residual_little(n, lp, p).is_zero()
            ok &= phi32_little(n, lp, p) == y == expand_little(n, lp, p)
    return _report(5, "little q-Jacobi eigen-equation, difference oracle, three routes, n <= 10", ok)


def criterion_6() -> bool:
    ok = True
    for profile in ("little", "big"):
        for p in _points(profile):
            W0, _ = build_W(p, chevalley(p))
            if profile == "little":
                params, G, bidiag = little_dictionary(p), little_operator(p), bidiag_little
            else:
                params, G, bidiag = big_dictionary(p), big_operator(p), bidiag_big
            f_prev = LaurentPoly()
            for n in range(N + 1):
                f = eigenfunction_f(n, p)
                ok &= W0.apply(f) == f * w0_spectrum(n, p)
                a_n, b_n = bidiag(n, p, params)
                ok &= G.apply(f) == f * a_n + f_prev * b_n
                f_prev = f
    return _report(6, "W0 eigenfunctions and both bidiagonal actions, n <= 10", ok)


def criterion_7() -> bool:
    ok = True
    for p in _points("big"):
        bp = big_dictionary(p)
        G = big_operator(p)
        g = g_coeffs(p)
        for n in range(N + 1):
            y = big_poly_rescaled(n, bp, p)
            a_n = g.g5 * p.u**2 * (p.q ** (-2 * n) + bp.a * bp.b * p.q ** (2 * n + 2)) + g.g6
            ok &= qdiff_residual_big(n, bp, p).is_zero()
            ok &= G.apply(y) == y * a_n
        lp = LittleParams(bp.a, bp.b)
        ok &= all(little_from_big_residual(n, lp, p).is_zero() for n in range(N + 1))
    return _report(7, "big q-Jacobi difference oracle, G1 eigen-equation, little-from-big, n <= 10", ok)


def criterion_8() -> bool:
    ok = True
    for p in _points("general"):
        ok &= residual_A_from_B(p).is_zero() and residual_B_from_A(p).is_zero()
        ok &= tridiag_A_from_B(p).passed and tridiag_B_from_A(p).passed
        ok &= not residual_A_from_B(p, coeffs_A_from_B(p).perturbed("alpha")).is_zero()
    for p in _points("little"):
        reports = {r.check_name: r for r in big_from_little(one_sided_point(p))}
        ok &= all(r.passed for r in reports.values())
        ok &= reports["tridiag.constraint_forces_a"].passed
        ok &= reports["tridiag.big_from_little.alpha_breaks"].passed
    return _report(8, "tridiagonalization identities, forced a = q^2, negative control", ok)


def criterion_9() -> bool:
    with tempfile.TemporaryDirectory() as tmp:
        out = Path(tmp) / "report.json"
        start = time.perf_counter()
        res = subprocess.run([sys.executable, "-m", "qaw", "verify", "--suite", "all", "--seeds", "1,2,3",
                              "--n-max", "10", "--out", str(out)], capture_output=True, text=True)
        elapsed = time.perf_counter() - start
        summary = json.loads(out.read_text())["summary"] if out.exists() else {}
    ok = res.returncode == 0 and summary.get("failed") == 0 and elapsed < 60
    return _report(9, "end-to-end verify --suite all --seeds 1,2,3 --n-max 10", ok,
                   f"exit {res.returncode}, {summary.get('passed')}/{summary.get('total')} in {elapsed:.1f} s")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9]


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda f: f.__name__)
def test_criterion(criterion):
    ok = criterion()
    assert ok, LINES[-1]


if __name__ == "__main__":
    results = [c() for c in CRITERIA]
    sys.exit(0 if all(results) else 1)
