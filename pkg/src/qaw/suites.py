"""Named verification suites and the report document."""
from __future__ import annotations

import re
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .qcore import sample_point
from .qjacobi import verify_big, verify_little
from .report import VerificationReport
from .tridiag import verify_tridiag
from .uqsl2 import verify_aw, verify_chevalley, verify_equitable_aw

SUITES = ("uqsl2", "aw", "equitable", "little", "big", "tridiag")


def _tag(reports: list[VerificationReport], profile: str) -> list[VerificationReport]:
    for r in reports:
        r.check_name = f"{r.check_name}@{profile}"
    return reports


def run_suite(suite: str, seed: int, n_max: int = 10, corrupt: str | None = None) -> list[VerificationReport]:
    """Run one suite at the points drawn from ``seed``."""
    point = lambda profile: sample_point(seed, profile, n_max)  # noqa: E731
    if suite == "uqsl2":
        return _tag(verify_chevalley(point("general")), "general")
    if suite == "aw":
        out = []
        for profile in ("general", "little", "big"):
            out += _tag(verify_aw(point(profile)), profile)
        return out
    if suite == "equitable":
        out = []
        for profile in ("general", "equitable"):
            out += _tag(verify_equitable_aw(point(profile)), profile)
        return out
    if suite == "little":
        return _tag(verify_little(point("little"), n_max), "little")
    if suite == "big":
        return _tag(verify_big(point("big"), n_max), "big")
    if suite == "tridiag":
        return _tag(verify_tridiag(point("general"), point("little"), corrupt), "general+little")
    raise ValueError(f"unknown suite {suite!r}; expected one of {SUITES} or 'all'")


def _natural(name: str):
    return [int(tok) if tok.isdigit() else tok for tok in re.split(r"(\d+)", name)]


def _run_task(args):
    return run_suite(*args)


def run(suites, seeds, n_max: int = 10, corrupt: str | None = None, jobs: int = 1) -> list[VerificationReport]:
    """Run every (suite, seed) pair; reports come back ordered by (suite, check_name, seed)."""
    tasks = [(s, seed, n_max, corrupt) for s in suites for seed in seeds]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_run_task, tasks))
    else:
        chunks = [_run_task(t) for t in tasks]
    order = {s: i for i, s in enumerate(SUITES)}
    reports = [r for chunk in chunks for r in chunk]
    reports.sort(key=lambda r: (order.get(r.check_name.split(".")[0], len(order)),
                                _natural(r.check_name), r.seed or 0))
    return reports


def report_document(reports: list[VerificationReport], invocation: dict) -> dict:
    passed = sum(r.passed for r in reports)
    return {
        "tool_version": __version__,
        "invocation": invocation,
        "reports": [r.to_dict() for r in reports],
        "summary": {"total": len(reports), "passed": passed, "failed": len(reports) - passed},
    }
