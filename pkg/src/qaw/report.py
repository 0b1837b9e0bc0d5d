"""Verification records and the helper that turns a residual into one."""
from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import asdict, dataclass

from .qcore import ParamPoint
from .skewring import LaurentPoly, SkewOp


@dataclass
class VerificationReport:
    check_name: str
    paper_anchor: str
    seed: int | None
    point_digest: str
    status: str
    residual_summary: str
    elapsed_ms: int

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return asdict(self)


def summarize(residual) -> str:
    if isinstance(residual, (SkewOp, LaurentPoly)):
        if residual.is_zero():
            return ""
        if isinstance(residual, SkewOp):
            return residual.head()
        return repr(residual)[:200]
    if isinstance(residual, bool):
        return "" if residual else "condition violated"
    if residual == 0:
        return ""
    return f"nonzero scalar residual {residual}"


def is_clean(residual) -> bool:
    if isinstance(residual, (SkewOp, LaurentPoly)):
        return residual.is_zero()
    if isinstance(residual, bool):
        return residual
    return residual == 0


def make_report(name: str, anchor: str, p: ParamPoint, residual, elapsed_ms: int = 0,
                expect_zero: bool = True) -> VerificationReport:
    """Build a record; with ``expect_zero=False`` the check passes iff the residual is nonzero."""
    clean = is_clean(residual)
    ok = clean if expect_zero else not clean
    if ok:
        summary = ""
    elif expect_zero:
        summary = summarize(residual)
    else:
        summary = "expected a nonzero residual, got zero"
    return VerificationReport(
        check_name=name,
        paper_anchor=anchor,
        seed=p.seed,
        point_digest=p.digest(),
        status="pass" if ok else "fail",
        residual_summary=summary,
        elapsed_ms=int(elapsed_ms),
    )


@contextmanager
def stopwatch():
    box = {}
    start = time.perf_counter()
    try:
        yield box
    finally:
        box["ms"] = (time.perf_counter() - start) * 1000.0


def timed(name: str, anchor: str, p: ParamPoint, fn, expect_zero: bool = True) -> VerificationReport:
    """Evaluate ``fn()`` to a residual and wrap it in a report."""
    start = time.perf_counter()
    residual = fn()
    ms = (time.perf_counter() - start) * 1000.0
    return make_report(name, anchor, p, residual, ms, expect_zero=expect_zero)
