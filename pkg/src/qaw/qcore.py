"""Exact scalars, q-Pochhammer symbols and parameter points.

Scalars are :class:`fractions.Fraction` values.  A :class:`ParamPoint` fixes
every free parameter to a rational number; ``t`` plays the role of ``q**(1/2)``
and ``u`` the role of ``q**nu`` so that half-integer powers of ``q`` and
arbitrary powers of ``q**nu`` stay rational.
"""
from __future__ import annotations

import hashlib
import json
import random
from dataclasses import dataclass, fields, replace
from fractions import Fraction
from typing import Iterable

Scalar = Fraction

PROFILES = ("general", "little", "big", "equitable")

DEFAULT_N_MAX = 10
MAX_REDRAWS = 200


class DegenerateParameters(ValueError):
    """Raised when a parameter point makes some coefficient formula singular."""


def to_scalar(value) -> Fraction:
    """Coerce an int, Fraction or ``"num/den"`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return Fraction(value.strip().replace("−", "-"))
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"cannot convert {value!r} to an exact scalar")


def fmt(x: Fraction) -> str:
    """Format a rational as ``"num/den"``; integers drop the ``/1``."""
    return str(x)


def qpoch(a, qq, n: int) -> Fraction:
    """Finite q-shifted factorial ``(a; qq)_n = prod_{k<n} (1 - a*qq**k)``."""
    if n < 0:
        raise ValueError("qpoch needs n >= 0")
    a = to_scalar(a)
    qq = to_scalar(qq)
    out = Fraction(1)
    term = a
    for _ in range(n):
        out *= 1 - term
        term *= qq
    return out


@dataclass(frozen=True)
class ParamPoint:
    """A full rational assignment of every free parameter.

    ``c0, cb0, c1, cb1, eps0, eps1, mu0, mu1`` are the coefficients of the
    twisted primitive elements W0, W1.  ``a, b, c`` are the equitable
    parameters; ``pa, pb, pc`` are the polynomial parameters.
    """

    t: Fraction
    u: Fraction
    c0: Fraction = Fraction(0)
    cb0: Fraction = Fraction(0)
    c1: Fraction = Fraction(0)
    cb1: Fraction = Fraction(0)
    eps0: Fraction = Fraction(0)
    eps1: Fraction = Fraction(0)
    mu0: Fraction = Fraction(0)
    mu1: Fraction = Fraction(0)
    a: Fraction = Fraction(1)
    b: Fraction = Fraction(1)
    c: Fraction = Fraction(1)
    pa: Fraction = Fraction(0)
    pb: Fraction = Fraction(0)
    pc: Fraction = Fraction(0)
    profile: str = "general"
    seed: int | None = None

    def __post_init__(self):
        for f in fields(self):
            if f.name in ("profile", "seed"):
                continue
            object.__setattr__(self, f.name, to_scalar(getattr(self, f.name)))

    @property
    def q(self) -> Fraction:
        return self.t * self.t

    @property
    def qi(self) -> Fraction:
        return 1 / self.q

    def qp(self, k) -> Fraction:
        """``q**(k/2)`` for integer ``k``, i.e. half-integer powers of q."""
        return self.t ** k

    def qnu(self, k: int = 1) -> Fraction:
        """``q**(k*nu)``."""
        return self.u ** k

    @property
    def dq(self) -> Fraction:
        """``q - 1/q``."""
        return self.q - self.qi

    @property
    def sq(self) -> Fraction:
        """``q + 1/q``."""
        return self.q + self.qi

    def with_(self, **changes) -> "ParamPoint":
        return replace(self, **changes)

    def as_dict(self) -> dict:
        out = {}
        for f in fields(self):
            v = getattr(self, f.name)
            out[f.name] = fmt(v) if isinstance(v, Fraction) else v
        return out

    def digest(self) -> str:
        """Canonical short hash of the rational values (seed/profile excluded)."""
        body = {k: v for k, v in self.as_dict().items() if k not in ("seed", "profile")}
        blob = json.dumps(body, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()[:16]


def omega(p: ParamPoint) -> Fraction:
    """Casimir eigenvalue ``(q u^2 + q^-1 u^-2) / (q - q^-1)^2`` on V_nu."""
    return (p.q * p.u**2 + p.qi / p.u**2) / p.dq**2


def _nonzero(values: Iterable[Fraction]) -> bool:
    return all(v != 0 for v in values)


def _denominators(p: ParamPoint, n_max: int) -> list[Fraction]:
    """Every denominator appearing in an implemented coefficient formula."""
    q, u = p.q, p.u
    dens = [q - 1 / q, q + 1 / q, q**2 - q**-2]
    # tridiagonalization of A from B and back
    if _nonzero((p.a, p.b, p.c)):
        dens += [p.a, p.b, p.c]
    # little / big dictionaries divide by g5 and g3
    if p.profile in ("little", "big"):
        dens += [p.cb0, p.c1]
    if p.profile == "little":
        dens += [p.mu1, p.eps0]
    # Pochhammer denominators of the expansions and the 2phi1 / 3phi2 forms
    q2 = q * q
    for m in range(0, n_max + 1):
        dens.append(1 - p.pa * q2 ** (m + 1))
        dens.append(1 - p.pb * q2 ** (m + 1))
        dens.append(1 - p.pc * q2 ** (m + 1))
        dens.append(1 - q2 ** (m + 1))
    if p.profile in ("little", "big"):
        dens.append(p.pb)
    # one-sided tridiagonalization denominator (little point with pa = q^2)
    if p.profile == "little":
        from .uqsl2 import g_coeffs

        g = g_coeffs(p)
        dens.append(q ** -3 / u**2 * g.g4 - q**3 * u**2 * g.g5)
        dens.append(g.g2)
    return dens


def screen_degeneracies(p: ParamPoint, n_max: int = DEFAULT_N_MAX) -> bool:
    """True iff ``p`` is a safe point for every implemented formula up to ``n_max``."""
    if p.t in (0, 1, -1):
        return False
    if p.u == 0:
        return False
    q = p.q
    u2 = p.u**2
    for m in range(-2 * n_max, 2 * n_max + 1):
        if u2 == q**m:
            return False
    return _nonzero(_denominators(p, n_max))


def _rand_rational(rng: random.Random, lo: int = 1, hi: int = 9, sign: bool = True) -> Fraction:
    num = rng.randint(lo, hi)
    den = rng.randint(lo, hi)
    x = Fraction(num, den)
    if sign and rng.random() < 0.5:
        x = -x
    return x


def _rand_nonunit(rng: random.Random) -> Fraction:
    while True:
        x = _rand_rational(rng, 1, 7)
        if x not in (1, -1):
            return x


def _draw(rng: random.Random, profile: str) -> ParamPoint:
    t = _rand_nonunit(rng)
    u = _rand_nonunit(rng)
    r = lambda: _rand_rational(rng)  # noqa: E731
    base = dict(t=t, u=u, a=r(), b=r(), c=r(), profile=profile)
    if profile == "general":
        return ParamPoint(c0=r(), cb0=r(), c1=r(), cb1=r(), eps0=r(), eps1=r(),
                          mu0=r(), mu1=r(), pa=r(), pb=r(), pc=r(), **base)
    if profile == "little":
        return little_point(t, u, pa=r(), pb=r(), cb0=r(), c1=r(),
                            a=base["a"], b=base["b"], c=base["c"])
    if profile == "big":
        return big_point(t, u, pa=r(), pb=r(), pc=r(), cb0=r(), c1=r(),
                         a=base["a"], b=base["b"], c=base["c"])
    if profile == "equitable":
        return equitable_point(t, u, b=base["b"], c=base["c"], cb0=r())
    raise ValueError(f"unknown profile {profile!r}; expected one of {PROFILES}")


def little_point(t, u, pa, pb, cb0=1, c1=1, **extra) -> ParamPoint:
    """Little profile point (c0 = cb1 = mu0 = 0) realizing given (pa, pb).

    The remaining W-scalars are solved so that the eigenfunction scale and the
    parameter dictionary line up with the little q-Jacobi polynomials.
    """
    t, u, pa, pb, cb0, c1 = map(to_scalar, (t, u, pa, pb, cb0, c1))
    q = t * t
    dq, sq = q - 1 / q, q + 1 / q
    kappa = q * q * pb
    eps0 = kappa * cb0 * q * u / (1 - q * q)
    eps1 = -c1 * u / dq
    mu1 = pa * c1 * q * sq * u**3 / dq
    return ParamPoint(t=t, u=u, cb0=cb0, c1=c1, eps0=eps0, eps1=eps1, mu1=mu1,
                      pa=pa, pb=pb, profile="little", **extra)


def big_point(t, u, pa, pb, pc, cb0=1, c1=1, **extra) -> ParamPoint:
    """Big profile point (c0 = mu0 = 0) realizing the rescaled (pa, pb, pc)."""
    t, u, pa, pb, pc, cb0, c1 = map(to_scalar, (t, u, pa, pb, pc, cb0, c1))
    q = t * t
    dq, sq = q - 1 / q, q + 1 / q
    kappa = q * q * pb
    eps0 = kappa * cb0 * q * u / (1 - q * q)
    mu1 = pa * c1 * q * sq * u**3 / dq
    cb1 = -pa * pc * c1 * u**2 / pb**2
    eps1 = -(pa + pc) * c1 * u / (pb * dq)
    return ParamPoint(t=t, u=u, cb0=cb0, cb1=cb1, c1=c1, eps0=eps0, eps1=eps1,
                      mu1=mu1, pa=pa, pb=pb, pc=pc, profile="big", **extra)


def equitable_point(t, u, b, c, cb0=1) -> ParamPoint:
    """Little-profile point whose reduced operator equals the equitable B.

    The W-scalars are matched to the g-values that turn the reduced
    operator into ``bY + b^-1 Z + q c a^-1 (1 - YZ)``; the constant term
    g6 = 0 then fixes ``a``.
    """
    t, u, b, c, cb0 = map(to_scalar, (t, u, b, c, cb0))
    q = t * t
    dq, sq = q - 1 / q, q + 1 / q
    om = (q * u**2 + 1 / (q * u**2)) / dq**2
    # g5 = 1/b, g4 = b, g2 = (1 - q^-2) t / b, g3 = -t^-3 dq c / a, g6 = 0
    c1 = -dq / (b * cb0 * q * sq)
    g2 = (1 - q**-2) * t / b
    eps1 = g2 / (cb0 * (q * q - q**-2) * q)
    # mu1 * eps0 = b / dq and mu1 * cb0 = g3 / dq = -t**-3 c / a
    # g6 = 0:  c1 cb0 q dq om + eps0 eps1 dq = 0
    eps0 = -c1 * cb0 * q * om / eps1
    mu1 = b / (dq * eps0)
    a = -(t**-3) * c / (mu1 * cb0)
    return ParamPoint(t=t, u=u, cb0=cb0, c1=c1, eps0=eps0, eps1=eps1, mu1=mu1,
                      a=a, b=b, c=c, profile="equitable")


def sample_point(seed: int, profile: str = "general", n_max: int = DEFAULT_N_MAX) -> ParamPoint:
    """Deterministically draw a screened parameter point for ``profile``."""
    if profile not in PROFILES:
        raise ValueError(f"unknown profile {profile!r}; expected one of {PROFILES}")
    rng = random.Random(f"{profile}:{seed}")
    for _ in range(MAX_REDRAWS):
        p = _draw(rng, profile)
        if screen_degeneracies(p, n_max):
            return replace(p, seed=seed)
    raise DegenerateParameters(
        f"no admissible {profile} point after {MAX_REDRAWS} draws (seed={seed})")
