"""Tridiagonalization identities in the skew Laurent ring.

``O`` and ``Obar`` act as multiplication by ``z`` and ``z**-1``.  Each identity
is checked as an exact operator equation with the closed-form coefficients.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, replace
from fractions import Fraction

from .qcore import DegenerateParameters, ParamPoint, screen_degeneracies
from .qjacobi import little_dictionary, operator_via_W
from .report import VerificationReport, make_report, timed
from .skewring import SkewOp
from .uqsl2 import GCoefficients, chevalley, equitable_ABC, g_coeffs, g_reconstruct


@dataclass(frozen=True)
class TridiagCoeffs:
    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    delta: Fraction
    gamma_prime: Fraction | None = None

    def perturbed(self, name: str, by: Fraction = Fraction(1)) -> "TridiagCoeffs":
        return replace(self, **{name: getattr(self, name) + by})


def O(p: ParamPoint) -> SkewOp:
    return SkewOp.z(p.q)


def Obar(p: ParamPoint) -> SkewOp:
    return SkewOp.z(p.q, -1)


def coeffs_A_from_B(p: ParamPoint) -> TridiagCoeffs:
    q, t, u, a, b, c = p.q, p.t, p.u, p.a, p.b, p.c
    den = q**2 - q**-2
    return TridiagCoeffs(
        alpha=-q * (t**3 * u * a * b - 1 / (t**3 * u * c)) / den,
        beta=(t * u * a * b - t**3 / (u * c)) / den,
        gamma=b / c * t**3 * u + a * t / u,
        delta=(q * u**2 * a + 1 / (q * u**2 * a) + b * c + 1 / (b * c)) / p.sq,
    )


def coeffs_B_from_A(p: ParamPoint) -> TridiagCoeffs:
    q, t, u, a, b, c = p.q, p.t, p.u, p.a, p.b, p.c
    den = q**2 - q**-2
    return TridiagCoeffs(
        alpha=-(t**3 * u * c - 1 / (t**3 * u * a * b)) / (q * den),
        beta=(u * c / t**3 - 1 / (t * u * a * b)) / den,
        gamma=u / (b * t) + c / (a * t**3 * u),
        delta=(q * u**2 * b + 1 / (q * u**2 * b) + a * c + 1 / (a * c)) / p.sq,
    )


def _combo(k: TridiagCoeffs, X: SkewOp, Y: SkewOp) -> SkewOp:
    """``alpha X Y + beta Y X + gamma X + delta``."""
    return (X * Y).scale(k.alpha) + (Y * X).scale(k.beta) + X.scale(k.gamma) + k.delta


def _require(p: ParamPoint):
    if 0 in (p.a, p.b, p.c):
        raise DegenerateParameters("equitable parameters a, b, c must be nonzero")
    if not screen_degeneracies(p, 0):
        raise DegenerateParameters(f"degenerate point {p.digest()}")


def residual_A_from_B(p: ParamPoint, k: TridiagCoeffs | None = None) -> SkewOp:
    A, B, _ = equitable_ABC(p)
    k = k or coeffs_A_from_B(p)
    return A - _combo(k, O(p), B)


def residual_B_from_A(p: ParamPoint, k: TridiagCoeffs | None = None) -> SkewOp:
    A, B, _ = equitable_ABC(p)
    k = k or coeffs_B_from_A(p)
    return B - _combo(k, Obar(p), A)


def residual_roundtrip(p: ParamPoint) -> SkewOp:
    """A rebuilt from the expression of B in terms of A."""
    A, _, _ = equitable_ABC(p)
    B_from_A = _combo(coeffs_B_from_A(p), Obar(p), A)
    return A - _combo(coeffs_A_from_B(p), O(p), B_from_A)


def tridiag_A_from_B(p: ParamPoint, corrupt: str | None = None) -> VerificationReport:
    _require(p)
    k = coeffs_A_from_B(p)
    if corrupt:
        k = k.perturbed(corrupt)
    return timed("tridiag.A_from_B", "tridiagonalization of B into A", p,
                 lambda: residual_A_from_B(p, k))


def tridiag_B_from_A(p: ParamPoint, corrupt: str | None = None) -> VerificationReport:
    _require(p)
    k = coeffs_B_from_A(p)
    if corrupt:
        k = k.perturbed(corrupt)
    return timed("tridiag.B_from_A", "inverse tridiagonalization of A into B", p,
                 lambda: residual_B_from_A(p, k))


def reduction_residuals(p: ParamPoint) -> dict[str, SkewOp]:
    """Reduction rules used when moving O / Obar through Chevalley monomials."""
    g = chevalley(p)
    q, u, dq = p.q, p.u, p.dq
    o, ob = O(p), Obar(p)
    SmKm, SmKp = g.Sminus * g.Kminus, g.Sminus * g.Kplus
    SpKm, SpKp = g.Splus * g.Kminus, g.Splus * g.Kplus
    K2, Km2 = g.K(2), g.K(-2)
    return {
        "O.SmKm": o * SmKm - (u - Km2 / u) / dq,
        "O.SmKp": o * SmKp - (-1 / u + K2.scale(u)) / dq,
        "SmKm.O": SmKm * o - (u - Km2 / (u * q**2)) / dq,
        "SmKp.O": SmKp * o - (-1 / u + K2.scale(u * q**2)) / dq,
        "K2.O": K2 * o - (SpKp.scale(-dq * u * q**2) + o.scale(q**2 * u**2)),
        "Km2.O": Km2 * o - (SpKm.scale(dq / (u * q**2)) + o / (q**2 * u**2)),
        "Ob.SpKp": ob * SpKp - (u - K2 / u) / dq,
        "Ob.SpKm": ob * SpKm - (-1 / u + Km2.scale(u)) / dq,
        "SpKp.Ob": SpKp * ob - (u - K2 / (u * q**2)) / dq,
        "SpKm.Ob": SpKm * ob - (-1 / u + Km2.scale(u * q**2)) / dq,
        "Km2.Ob": Km2 * ob - (SmKm.scale(-dq * u * q**2) + ob.scale(q**2 * u**2)),
        "K2.Ob": K2 * ob - (SmKp.scale(dq / (u * q**2)) + ob / (q**2 * u**2)),
        "Sm2": g.Sminus * g.Sminus - ((ob * SmKm).scale(-q / (u * dq)) + (ob * SmKp).scale(u / (q * dq))),
        "SmKm.Ob_swap": SmKm * ob - ((ob * SmKm).scale(q**2) - (ob * ob).scale(u * q)),
        "SmKp.Ob_swap": SmKp * ob - ((ob * SmKp) / q**2 - (ob * ob) / (u * q)),
        "O.Ob": o * ob - 1,
        "Ob.O": ob * o - 1,
    }


# -- one-sided tridiagonalization of the little operator -------------------

def one_sided_point(p: ParamPoint) -> ParamPoint:
    """Adjust a little-profile point so that tg3 = -q^(2nu+2) tg2.

    Only mu1 changes (tg3 = mu1 cb0 (q - q^-1) at little points); the stored
    ``pa`` is refreshed from the dictionary.
    """
    g = g_coeffs(p)
    q, u = p.q, p.u
    mu1 = -(q**2) * u**2 * g.g2 / (p.cb0 * p.dq)
    out = replace(p, mu1=mu1)
    return replace(out, pa=little_dictionary(out).a)


def one_sided_coeffs(p: ParamPoint, tg: GCoefficients, g2, g3, g6) -> TridiagCoeffs:
    """beta, gamma, gamma', delta for big-operator values (g2, g3, g6)."""
    q, u, dq = p.q, p.u, p.dq
    if tg.g1 or tg.g2p or tg.g3p:
        raise DegenerateParameters("tilde g-table must have g1 = g2' = g3' = 0")
    if tg.g3 != -(q**2) * u**2 * tg.g2:
        raise DegenerateParameters("constraint tg3 = -q^(2nu+2) tg2 violated")
    D = tg.g4 / (q**3 * u**2) - q**3 * u**2 * tg.g5
    if D == 0 or tg.g2 == 0:
        raise DegenerateParameters("one-sided tridiagonalization denominator vanishes")
    lin = u * q * g2 + g3 / (u * q)
    gamma = (u * q**2 * g3 * tg.g5 + tg.g4 * g2 / (u * q**2)) / (u * q * tg.g2 * D)
    return TridiagCoeffs(
        alpha=Fraction(0),
        beta=lin / (dq * D),
        gamma=gamma,
        gamma_prime=-(tg.g4 / (q**2 * u**2) + q**2 * u**2 * tg.g5 + tg.g6) * lin / (dq * D),
        delta=g6 - gamma * tg.g6,
    )


def derived_big_g(p: ParamPoint, tg: GCoefficients, k: TridiagCoeffs) -> GCoefficients:
    """g-table of the big operator produced by the combination (alpha general)."""
    q, u, dq = p.q, p.u, p.dq
    ap, am = k.alpha + k.beta * q**2, k.alpha + k.beta / q**2
    return GCoefficients(
        g1=-ap * dq * u / q * tg.g2,
        g2=-ap * dq * u * tg.g5 + k.gamma * tg.g2,
        g3=am * dq / u * tg.g4 + k.gamma * tg.g3,
        g2p=Fraction(0),
        g3p=Fraction(0),
        g4=k.gamma * tg.g4,
        g5=k.gamma * tg.g5,
        g6=k.gamma * tg.g6 + k.delta,
    )


def one_sided_residual(p: ParamPoint, tg: GCoefficients, k: TridiagCoeffs, G1: SkewOp,
                       Gt: SkewOp) -> SkewOp:
    ob = Obar(p)
    rhs = ((ob * Gt).scale(k.alpha) + (Gt * ob).scale(k.beta) + Gt.scale(k.gamma)
           + ob.scale(k.gamma_prime) + k.delta)
    return G1 - rhs


def big_from_little(p: ParamPoint, tg: GCoefficients | None = None, big_g=None,
                    corrupt: str | None = None) -> list[VerificationReport]:
    """One-sided tridiagonalization of the little operator into a big one.

    ``p`` is a little-profile point satisfying the constraint (see
    :func:`one_sided_point`).  ``big_g`` = (g2, g3, g6) are free values of
    the big operator; they default to seeded draws.
    """
    q = p.q
    tg = tg or g_coeffs(p)
    if big_g is None:
        rng = random.Random(f"big_from_little:{p.seed}:{p.digest()}")
        big_g = tuple(Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 9))
                      for _ in range(3))
    g2, g3, g6 = big_g
    k = one_sided_coeffs(p, tg, g2, g3, g6)
    derived = derived_big_g(p, tg, k)
    # target operator: free (g2, g3, g6), remaining g-values from the closed forms
    gbig = replace(derived, g2=g2, g3=g3, g6=g6)
    if corrupt:
        k = k.perturbed(corrupt)
    g = chevalley(p)
    G1 = g_reconstruct(g, gbig)
    Gt = g_reconstruct(g, tg)
    anchor = "one-sided tridiagonalization of the little operator"
    out = [
        timed("tridiag.big_from_little", anchor, p, lambda: one_sided_residual(p, tg, k, G1, Gt)),
        make_report("tridiag.big_from_little.g_table_consistent", anchor, p, derived == gbig),
        make_report("tridiag.big_from_little.g1_formula", anchor, p,
                    derived.g1 - (-k.beta * q**2 * p.dq * p.u / q * tg.g2)),
    ]
    try:
        forced_a = little_dictionary(p).a
        out.append(make_report("tridiag.constraint_forces_a", anchor, p, forced_a - q**2))
    except ValueError as exc:
        rep = make_report("tridiag.constraint_forces_a", anchor, p, False)
        rep.residual_summary = f"dictionary failed: {exc}"
        out.append(rep)
    if p.mu0 == 0 and p.c0 == 0 and p.cb1 == 0:
        out.append(timed("tridiag.big_from_little.tilde_is_little_operator", anchor, p,
                         lambda: Gt - operator_via_W(p)))
    broken = replace(k, alpha=Fraction(1))
    out.append(timed("tridiag.big_from_little.alpha_breaks", anchor, p,
                     lambda: one_sided_residual(p, tg, broken, G1, Gt), expect_zero=False))
    return out


def verify_tridiag(p_equitable: ParamPoint, p_little: ParamPoint,
                   corrupt: str | None = None) -> list[VerificationReport]:
    """Both equitable lemmas, reductions, round trip, negative control, one-sided lemma."""
    pe = p_equitable
    out = [tridiag_A_from_B(pe, corrupt), tridiag_B_from_A(pe)]
    out.append(timed("tridiag.roundtrip", "tridiagonalization round trip", pe, lambda: residual_roundtrip(pe)))
    for name, res in reduction_residuals(pe).items():
        out.append(make_report(f"tridiag.reduction.{name}", "O / Obar reduction rules", pe, res))
    bad = coeffs_A_from_B(pe).perturbed("alpha")
    out.append(timed("tridiag.negative_control", "tridiagonalization of B into A", pe,
                     lambda: residual_A_from_B(pe, bad), expect_zero=False))
    out += big_from_little(one_sided_point(p_little))
    return out
