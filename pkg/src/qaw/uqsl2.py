"""U_q(sl2) in the holomorphic q-difference realization and the AW algebra inside it.

All elements are :class:`~qaw.skewring.SkewOp` values at a fixed
:class:`~qaw.qcore.ParamPoint`.  The Casimir element acts on V_nu as the scalar
``omega(p)`` and is replaced by it wherever it enters a structure constant.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .qcore import DegenerateParameters, ParamPoint, omega, screen_degeneracies
from .report import VerificationReport, timed
from .skewring import SkewOp, q_commutator


@dataclass(frozen=True)
class ChevalleySet:
    Splus: SkewOp
    Sminus: SkewOp
    Kplus: SkewOp
    Kminus: SkewOp

    @property
    def q(self) -> Fraction:
        return self.Kplus.q

    def K(self, n: int) -> SkewOp:
        """``q**(n*s3)``."""
        return self.Kplus**n if n >= 0 else self.Kminus ** (-n)


@dataclass(frozen=True)
class GCoefficients:
    g1: Fraction
    g2: Fraction
    g3: Fraction
    g2p: Fraction
    g3p: Fraction
    g4: Fraction
    g5: Fraction
    g6: Fraction


@dataclass(frozen=True)
class AWStructureConstants:
    rho0: Fraction
    rho1: Fraction
    omega: Fraction
    gamma0: Fraction
    gamma1: Fraction
    eta0: Fraction
    eta1: Fraction


@dataclass(frozen=True)
class Equitable:
    X: SkewOp
    Y: SkewOp
    Yinv: SkewOp
    Z: SkewOp


def chevalley(p: ParamPoint) -> ChevalleySet:
    q, u = p.q, p.u
    T = SkewOp.shift(q)
    Ti = SkewOp.shift(q, -1)
    z = SkewOp.z(q)
    zi = SkewOp.z(q, -1)
    Kplus = T.scale(1 / u)
    Kminus = Ti.scale(u)
    Splus = z * (Ti.scale(u**2) - T.scale(u**-2)) / p.dq
    Sminus = -(zi * (Ti - T)) / p.dq
    return ChevalleySet(Splus=Splus, Sminus=Sminus, Kplus=Kplus, Kminus=Kminus)


def casimir_op(g: ChevalleySet) -> SkewOp:
    q = g.q
    dq = q - 1 / q
    return (g.K(2).scale(1 / q) + g.K(-2).scale(q)) / dq**2 + g.Splus * g.Sminus


def casimir_value(p: ParamPoint) -> Fraction:
    return omega(p)


def equitable(g: ChevalleySet, p: ParamPoint) -> Equitable:
    t = p.t
    q = p.q
    X = g.K(-2) - (g.Splus * g.Kminus).scale(p.dq * t)
    Y = g.K(2)
    Z = g.K(-2) + (g.Sminus * g.Kminus).scale((1 - q**-2) * t)
    return Equitable(X=X, Y=Y, Yinv=g.K(-2), Z=Z)


def build_W(p: ParamPoint, g: ChevalleySet) -> tuple[SkewOp, SkewOp]:
    W0 = ((g.Splus * g.Kplus).scale(p.c0) + (g.Sminus * g.Kplus).scale(p.cb0)
          + g.K(2).scale(p.eps0) + p.mu0)
    W1 = ((g.Splus * g.Kminus).scale(p.c1) + (g.Sminus * g.Kminus).scale(p.cb1)
          + g.K(-2).scale(p.eps1) + p.mu1)
    return W0, W1


def build_G1(W0: SkewOp, W1: SkewOp) -> SkewOp:
    return q_commutator(W1, W0, W0.q)


def g_coeffs(p: ParamPoint) -> GCoefficients:
    q, qi, dq, sq = p.q, p.qi, p.dq, p.sq
    om = omega(p)
    c0, cb0, c1, cb1 = p.c0, p.cb0, p.c1, p.cb1
    e0, e1, m0, m1 = p.eps0, p.eps1, p.mu0, p.mu1
    return GCoefficients(
        g1=cb0 * cb1 * (q**2 - q**-2),
        g2=cb0 * e1 * (q**2 - q**-2) * q + m0 * cb1 * dq,
        g3=cb1 * e0 * (q**2 - q**-2) * qi + m1 * cb0 * dq,
        g2p=m0 * c1 * dq,
        g3p=m1 * c0 * dq,
        g4=-c0 * cb1 * qi * sq / dq + m1 * e0 * dq,
        g5=-c1 * cb0 * q * sq / dq + m0 * e1 * dq,
        g6=(c1 * cb0 * q + c0 * cb1 * qi) * dq * om + (e0 * e1 + m0 * m1) * dq,
    )


def g_reconstruct(g: ChevalleySet, gc: GCoefficients) -> SkewOp:
    """The operator ``g1 S-^2 + g2 S-K^-1 + ... + g6`` built from a g-table."""
    Sm, Sp = g.Sminus, g.Splus
    return ((Sm * Sm).scale(gc.g1)
            + (Sm * g.Kminus).scale(gc.g2) + (Sm * g.Kplus).scale(gc.g3)
            + (Sp * g.Kminus).scale(gc.g2p) + (Sp * g.Kplus).scale(gc.g3p)
            + g.K(2).scale(gc.g4) + g.K(-2).scale(gc.g5) + gc.g6)


def aw_constants(p: ParamPoint) -> AWStructureConstants:
    """Structure constants of the AW relations for W0, W1, G1 on V_nu.

    The closure constants use ``g6`` without its ``mu0*mu1*(q - q^-1)`` part,
    and the epsilon1 term of eta1 carries ``q*c1*cb0 + q^-1*c0*cb1``; both
    forms are what the exact ring computation requires.
    """
    q, qi, dq, sq = p.q, p.qi, p.dq, p.sq
    om = omega(p)
    c0, cb0, c1, cb1 = p.c0, p.cb0, p.c1, p.cb1
    e0, e1, m0, m1 = p.eps0, p.eps1, p.mu0, p.mu1
    g6 = g_coeffs(p).g6 - m0 * m1 * dq
    twist = q * c1 * cb0 + qi * c0 * cb1
    return AWStructureConstants(
        rho0=-c0 * cb0 * sq**2 - m0**2 * dq**2,
        rho1=-c1 * cb1 * sq**2 - m1**2 * dq**2,
        omega=dq * g6 - 2 * m0 * m1 * dq**2,
        gamma0=m0 * dq**2,
        gamma1=m1 * dq**2,
        eta0=(sq * (c0 * cb0 * e1 * dq**2 * om - e0 * twist)
              - m0 * dq * g6 + m1 * c0 * cb0 * sq**2 + m0**2 * m1 * dq**2),
        eta1=(sq * (c1 * cb1 * e0 * dq**2 * om - e1 * twist)
              - m1 * dq * g6 + m0 * c1 * cb1 * sq**2 + m1**2 * m0 * dq**2),
    )


def aw_residuals(p: ParamPoint) -> dict[str, SkewOp]:
    """Residuals of the three AW relations for W0, W1, G1 at ``p``."""
    g = chevalley(p)
    W0, W1 = build_W(p, g)
    G1 = build_G1(W0, W1)
    k = aw_constants(p)
    q = p.q
    anti = W0 * W1 + W1 * W0
    return {
        "G1": q_commutator(W1, W0, q) - G1,
        "W0G1": q_commutator(W0, G1, q) - (W1.scale(k.rho0) + W0.scale(k.omega) + anti.scale(k.gamma0)
                                           + (W0 * W0).scale(k.gamma1) + k.eta0),
        "G1W1": q_commutator(G1, W1, q) - (W0.scale(k.rho1) + W1.scale(k.omega) + anti.scale(k.gamma1)
                                           + (W1 * W1).scale(k.gamma0) + k.eta1),
    }


def reduced_residuals(p: ParamPoint) -> dict[str, SkewOp]:
    """Residuals of the reduced relations (valid when mu0 = c0 = 0)."""
    g = chevalley(p)
    W0, W1 = build_W(p, g)
    G1 = build_G1(W0, W1)
    k = aw_constants(p)
    q = p.q
    anti = W0 * W1 + W1 * W0
    return {
        "W0G1_reduced": q_commutator(W0, G1, q) - (W0.scale(k.omega) + (W0 * W0).scale(k.gamma1) + k.eta0),
        "G1W1_reduced": q_commutator(G1, W1, q) - (W0.scale(k.rho1) + W1.scale(k.omega)
                                                   + anti.scale(k.gamma1) + k.eta1),
    }


def _require_screen(p: ParamPoint):
    if not screen_degeneracies(p, 0):
        raise DegenerateParameters(f"degenerate point {p.digest()}")


def verify_chevalley(p: ParamPoint) -> list[VerificationReport]:
    _require_screen(p)
    g = chevalley(p)
    q = p.q
    one = SkewOp.identity(q)
    Om = casimir_op(g)
    checks = [
        ("KplusKminus", lambda: g.Kplus * g.Kminus - one),
        ("KminusKplus", lambda: g.Kminus * g.Kplus - one),
        ("KSplusK", lambda: g.Kplus * g.Splus * g.Kminus - g.Splus.scale(q)),
        ("KSminusK", lambda: g.Kplus * g.Sminus * g.Kminus - g.Sminus.scale(1 / q)),
        ("SplusSminus", lambda: g.Splus * g.Sminus - g.Sminus * g.Splus - (g.K(2) - g.K(-2)) / p.dq),
        ("casimir_scalar", lambda: Om - casimir_value(p)),
        ("casimir_central_Splus", lambda: Om * g.Splus - g.Splus * Om),
        ("casimir_central_Sminus", lambda: Om * g.Sminus - g.Sminus * Om),
        ("casimir_central_Kplus", lambda: Om * g.Kplus - g.Kplus * Om),
    ]
    return [timed(f"uqsl2.{name}", "quantum algebra relations and Casimir value", p, fn)
            for name, fn in checks]


def verify_equitable_relations(p: ParamPoint) -> list[VerificationReport]:
    g = chevalley(p)
    e = equitable(g, p)
    q = p.q
    one = SkewOp.identity(q)
    qc = lambda A, B: q_commutator(A, B, q) / p.dq - one  # noqa: E731
    checks = [
        ("YYinv", lambda: e.Y * e.Yinv - one),
        ("YinvY", lambda: e.Yinv * e.Y - one),
        ("XY", lambda: qc(e.X, e.Y)),
        ("YZ", lambda: qc(e.Y, e.Z)),
        ("ZX", lambda: qc(e.Z, e.X)),
    ]
    return [timed(f"equitable.{name}", "equitable presentation relations", p, fn)
            for name, fn in checks]


def verify_g_table(p: ParamPoint) -> VerificationReport:
    def residual():
        g = chevalley(p)
        W0, W1 = build_W(p, g)
        return build_G1(W0, W1) - g_reconstruct(g, g_coeffs(p))

    return timed("aw.g_table", "expansion of G1 in Chevalley monomials", p, residual)


def verify_aw(p: ParamPoint) -> list[VerificationReport]:
    """All AW relations, plus the reduced ones for little/big profile points."""
    _require_screen(p)
    out = [verify_g_table(p)]
    for name, res in aw_residuals(p).items():
        out.append(timed(f"aw.{name}", "askey-wilson relations of W0, W1, G1", p, lambda r=res: r))
    if p.mu0 == 0 and p.c0 == 0:
        for name, res in reduced_residuals(p).items():
            out.append(timed(f"aw.{name}", "reduced askey-wilson relations", p, lambda r=res: r))
    return out


# -- equitable Askey-Wilson generators -------------------------------------

def equitable_ABC(p: ParamPoint) -> tuple[SkewOp, SkewOp, SkewOp]:
    a, b, c = p.a, p.b, p.c
    if 0 in (a, b, c):
        raise DegenerateParameters("equitable parameters a, b, c must be nonzero")
    e = equitable(chevalley(p), p)
    q = p.q
    X, Y, Z = e.X, e.Y, e.Z
    A = X.scale(a) + Y.scale(1 / a) + (1 - X * Y).scale(q * b / c)
    B = Y.scale(b) + Z.scale(1 / b) + (1 - Y * Z).scale(q * c / a)
    C = Z.scale(c) + X.scale(1 / c) + (1 - Z * X).scale(q * a / b)
    return A, B, C


def Lambda(p: ParamPoint) -> Fraction:
    """Normalized Casimir ``(q - q^-1)**2 * omega``."""
    return p.dq**2 * omega(p)


def B_chevalley(p: ParamPoint, g: ChevalleySet | None = None) -> SkewOp:
    """B written through the g-values that make it the reduced little operator."""
    g = g or chevalley(p)
    q, t, a, b, c = p.q, p.t, p.a, p.b, p.c
    return ((g.Sminus * g.Kminus).scale((1 - q**-2) * t / b)
            - (g.Sminus * g.Kplus).scale(t**-3 * p.dq * c / a)
            + g.K(2).scale(b) + g.K(-2).scale(1 / b))


def A_chevalley(p: ParamPoint, g: ChevalleySet | None = None) -> SkewOp:
    g = g or chevalley(p)
    q, t, a, b, c = p.q, p.t, p.a, p.b, p.c
    return (-(g.Splus * g.Kminus).scale(a * p.dq * t)
            + (g.Splus * g.Kplus).scale(b / c * (q**2 - 1) * t)
            + g.K(2).scale(1 / a) + g.K(-2).scale(a))


def C_chevalley(p: ParamPoint, g: ChevalleySet | None = None) -> SkewOp:
    g = g or chevalley(p)
    q, t, a, b, c = p.q, p.t, p.a, p.b, p.c
    om = omega(p)
    Sm, Sp = g.Sminus, g.Splus
    return (g.K(-2).scale(c + 1 / c) - g.K(-4).scale(a / b * p.sq)
            + g.K(-2).scale(a / b * p.dq**2 * om)
            + (Sm * (g.K(-1).scale(c * t) - g.K(-3).scale(t**3 * a / b))
               - Sp * (g.K(-1).scale(t**3 / c) - g.K(-3).scale(a / b * t))).scale(1 - q**-2))


def equitable_residuals(p: ParamPoint) -> dict[str, SkewOp]:
    A, B, C = equitable_ABC(p)
    q = p.q
    a, b, c = p.a, p.b, p.c
    L = Lambda(p)
    den = q**2 - q**-2
    rhs = lambda x, y, w: (L * (x + 1 / x) + (y + 1 / y) * (w + 1 / w)) / p.sq  # noqa: E731
    g = chevalley(p)
    return {
        "A_relation": A + q_commutator(B, C, q) / den - rhs(a, b, c),
        "B_relation": B + q_commutator(C, A, q) / den - rhs(b, c, a),
        "C_relation": C + q_commutator(A, B, q) / den - rhs(c, a, b),
        "B_chevalley": B - B_chevalley(p, g),
        "A_chevalley": A - A_chevalley(p, g),
        "C_chevalley": C - C_chevalley(p, g),
    }


def verify_equitable_aw(p: ParamPoint) -> list[VerificationReport]:
    _require_screen(p)
    out = verify_equitable_relations(p)
    for name, res in equitable_residuals(p).items():
        out.append(timed(f"equitable.{name}", "equitable askey-wilson generators", p, lambda r=res: r))
    return out
