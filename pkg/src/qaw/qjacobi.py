"""Little and big q-Jacobi polynomials (base q**2) and their operator realization.

Polynomials are built several ways:

* ``little_poly``        terminating 2phi1
* ``phi32_little``       terminating 3phi2 in the variable q^2 b z
* ``expand_little``      overlap expansion over the W0 eigenfunctions f_s
* ``big_poly_rescaled``  overlap expansion of P_n(q^2 b z; a, b, c)

The eigen-equations are checked two independent ways: through the operator
G1 coming from U_q(sl2), and through the q-difference equation written
directly with the coefficient functions ``B(z)``, ``Bbar(z)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .qcore import DegenerateParameters, ParamPoint, qpoch, to_scalar
from .report import VerificationReport, make_report, timed
from .skewring import LaurentPoly, SkewOp
from .uqsl2 import build_G1, build_W, chevalley, g_coeffs


class IncompatiblePoint(ValueError):
    """The g-values at a point admit no consistent polynomial parameters."""


@dataclass(frozen=True)
class LittleParams:
    a: Fraction
    b: Fraction


@dataclass(frozen=True)
class BigParams:
    a: Fraction
    b: Fraction
    c: Fraction


def little_params(p: ParamPoint) -> LittleParams:
    return LittleParams(p.pa, p.pb)


def big_params(p: ParamPoint) -> BigParams:
    return BigParams(p.pa, p.pb, p.pc)


def _check_den(*values: Fraction, what: str = "denominator"):
    for v in values:
        if v == 0:
            raise DegenerateParameters(f"vanishing {what}")


def qpoch_poly(scale, qq, n: int) -> LaurentPoly:
    """``(scale*z; qq)_n`` expanded as a polynomial in z."""
    scale, qq = to_scalar(scale), to_scalar(qq)
    out = LaurentPoly.const(1)
    term = scale
    for _ in range(n):
        out = out * LaurentPoly({0: 1, 1: -term})
        term *= qq
    return out


# -- terminating series ----------------------------------------------------

def little_poly(n: int, lp: LittleParams, p: ParamPoint) -> LaurentPoly:
    """``2phi1(q^-2n, a b q^(2n+2); q^2 a; q^2; q^2 z)``."""
    q2 = p.q**2
    top1, top2, bot = q2**-n, lp.a * lp.b * q2 ** (n + 1), q2 * lp.a
    coeffs = {}
    for s in range(n + 1):
        den = qpoch(bot, q2, s) * qpoch(q2, q2, s)
        _check_den(den, what="2phi1 denominator")
        coeffs[s] = qpoch(top1, q2, s) * qpoch(top2, q2, s) / den * q2**s
    return LaurentPoly(coeffs)


def little_prefactor(n: int, lp: LittleParams, p: ParamPoint) -> Fraction:
    """``(-q^2 b)^-n q^(-n(n-1)) (q^2 b; q^2)_n / (q^2 a; q^2)_n``."""
    q = p.q
    q2 = q * q
    den = qpoch(q2 * lp.a, q2, n)
    _check_den(den, lp.b, what="normalization")
    return (-q2 * lp.b) ** -n * q ** (-n * (n - 1)) * qpoch(q2 * lp.b, q2, n) / den


def phi32_little(n: int, lp: LittleParams, p: ParamPoint) -> LaurentPoly:
    """Little polynomial as a normalized terminating 3phi2 with lower parameters (q^2 b, 0)."""
    q2 = p.q**2
    top1, top2 = q2**-n, lp.a * lp.b * q2 ** (n + 1)
    total = LaurentPoly()
    for s in range(n + 1):
        den = qpoch(q2 * lp.b, q2, s) * qpoch(q2, q2, s)
        _check_den(den, what="3phi2 denominator")
        w = qpoch(top1, q2, s) * qpoch(top2, q2, s) / den * q2**s
        total = total + qpoch_poly(q2 * lp.b, q2, s) * w
    return total * little_prefactor(n, lp, p)


# -- W0 eigenfunctions -----------------------------------------------------

def kappa(p: ParamPoint) -> Fraction:
    """Scale of the W0 eigenfunctions: ``(eps0/cb0)(1 - q^2) q^(-nu-1)``."""
    if p.cb0 == 0:
        raise DegenerateParameters("cb0 = 0: W0 has no q-Pochhammer eigenbasis")
    return p.eps0 / p.cb0 * (1 - p.q**2) / (p.q * p.u)


def eigenfunction_f(n: int, p: ParamPoint) -> LaurentPoly:
    return qpoch_poly(kappa(p), p.q**2, n)


def w0_spectrum(n: int, p: ParamPoint) -> Fraction:
    return p.eps0 * p.q ** (2 * n) / p.u**2


def w0_monomial_action(n: int, p: ParamPoint) -> tuple[Fraction, Fraction]:
    """``(lambda_n, nu_n)`` with ``W0 z^n = lambda_n z^n + nu_n z^(n-1)`` when c0 = mu0 = 0."""
    q2 = p.q**2
    return w0_spectrum(n, p), p.cb0 * p.q / p.u * (1 - q2**n) / (1 - q2)


# -- operators -------------------------------------------------------------

def little_operator(p: ParamPoint) -> SkewOp:
    """Reduced G1 as ``A0(z) T^2 + B0(z) T^-2 + C0(z)`` built from the g-table."""
    gc = g_coeffs(p)
    if gc.g1 or gc.g2p or gc.g3p:
        raise IncompatiblePoint("little operator needs g1 = g2' = g3' = 0")
    return _shift_form(p, gc)


def big_operator(p: ParamPoint) -> SkewOp:
    gc = g_coeffs(p)
    if gc.g2p or gc.g3p:
        raise IncompatiblePoint("big operator needs g2' = g3' = 0")
    return _shift_form(p, gc)


def _shift_form(p: ParamPoint, gc) -> SkewOp:
    q, u, dq = p.q, p.u, p.dq
    A0 = {-2: gc.g1 / (q * dq**2), -1: gc.g3 / (u * dq), 0: gc.g4 / u**2}
    B0 = {-2: gc.g1 * q / dq**2, -1: -gc.g2 * u / dq, 0: gc.g5 * u**2}
    C0 = {-2: -gc.g1 * p.sq / dq**2, -1: -(gc.g3 / u - gc.g2 * u) / dq, 0: gc.g6}
    terms = {}
    for k, table in ((2, A0), (-2, B0), (0, C0)):
        for j, c in table.items():
            terms[(j, k)] = c
    return SkewOp(q, terms)


def operator_via_W(p: ParamPoint) -> SkewOp:
    g = chevalley(p)
    W0, W1 = build_W(p, g)
    return build_G1(W0, W1)


# -- dictionaries ----------------------------------------------------------

def little_dictionary(p: ParamPoint) -> LittleParams:
    gc = g_coeffs(p)
    q, u, dq = p.q, p.u, p.dq
    _check_den(gc.g5, gc.g3, what="g5 or g3")
    if gc.g2 != dq * u * gc.g5:
        raise IncompatiblePoint("g2/g5 != (q - q^-1) q^nu at this point")
    a = -gc.g3 / gc.g5 / u**3 / dq
    b = -gc.g4 / gc.g3 * dq / (u * q**2)
    return LittleParams(a, b)


def _rational_sqrt(x: Fraction) -> Fraction | None:
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _quadratic_roots(s: Fraction, prod: Fraction) -> list[Fraction]:
    """Rational roots of ``X^2 - s X + prod``."""
    r = _rational_sqrt(s * s - 4 * prod)
    if r is None:
        raise IncompatiblePoint("parameter quadratic has no rational roots")
    return sorted({(s - r) / 2, (s + r) / 2})


def big_identification(p: ParamPoint, rescaled: bool) -> dict[str, Fraction]:
    """Right-hand sides of the four relations linking the g-table to (a, b, c).

    Keys: ``ac``, ``a_bc``, ``ab``, ``a_plus_c``.  With ``rescaled`` the
    relations refer to P_n(q^2 b z; a, b, c) and each quantity carries the
    corresponding power of b (``ac/b^2``, ``a(b+c)/b``, ``ab``, ``(a+c)/b``).
    """
    gc = g_coeffs(p)
    q, u, dq = p.q, p.u, p.dq
    _check_den(gc.g5, what="g5")
    if rescaled:
        return {
            "ac": gc.g1 / gc.g5 * q / u**2 / dq**2,
            "a_bc": -gc.g3 / gc.g5 / u**3 / dq,
            "ab": gc.g4 / gc.g5 / u**4 / q**2,
            "a_plus_c": gc.g2 / gc.g5 / u / dq,
        }
    return {
        "ac": gc.g1 / gc.g5 / (u**2 * q**3) / dq**2,
        "a_bc": -gc.g3 / gc.g5 / (u**3 * q**2) / dq,
        "ab": gc.g4 / gc.g5 / (u**4 * q**2),
        "a_plus_c": gc.g2 / gc.g5 / (u * q**2) / dq,
    }


def big_dictionary(p: ParamPoint, rescaled: bool = True) -> BigParams:
    """Invert the big q-Jacobi identification at ``p``.

    Four relations constrain three unknowns; the surplus relation is checked
    and ``IncompatiblePoint`` is raised if it fails.  Among admissible roots
    the one with the smaller ``a`` is returned.
    """
    rel = big_identification(p, rescaled)
    candidates = []
    if not rescaled:
        for a in _quadratic_roots(rel["a_plus_c"], rel["ac"]):
            if a == 0:
                continue
            c = rel["a_plus_c"] - a
            b = rel["ab"] / a
            if a * (b + c) == rel["a_bc"]:
                candidates.append(BigParams(a, b, c))
    else:
        # X = a/b is a root of X^2 - ((a+c)/b) X + ac/b^2; then 1/b follows
        # from a(b+c)/b = (X + ac/b^2) b.
        for X in _quadratic_roots(rel["a_plus_c"], rel["ac"]):
            if X + rel["ac"] == 0 or rel["a_bc"] == 0:
                continue
            b = rel["a_bc"] / (X + rel["ac"])
            a = X * b
            c = (rel["a_plus_c"] - X) * b
            if a * b == rel["ab"]:
                candidates.append(BigParams(a, b, c))
    if not candidates:
        raise IncompatiblePoint("no root satisfies the surplus relation")
    return min(candidates, key=lambda bp: bp.a)


# -- spectra and bidiagonal actions ----------------------------------------

def spectrum(n: int, p: ParamPoint, ab: Fraction) -> Fraction:
    """Eigenvalue ``g5 q^(2nu) (q^-2n + ab q^(2n+2)) + g6``."""
    gc = g_coeffs(p)
    q2 = p.q**2
    return gc.g5 * p.u**2 * (q2**-n + ab * q2 ** (n + 1)) + gc.g6


def bidiag_little(n: int, p: ParamPoint, lp: LittleParams) -> tuple[Fraction, Fraction]:
    gc = g_coeffs(p)
    q2 = p.q**2
    a_n = spectrum(n, p, lp.a * lp.b)
    b_n = -gc.g5 * p.u**2 * q2**-n * (1 - q2**n) * (1 - q2**n * lp.b)
    return a_n, b_n


def bidiag_big(n: int, p: ParamPoint, bp: BigParams) -> tuple[Fraction, Fraction]:
    gc = g_coeffs(p)
    q2 = p.q**2
    a_n = spectrum(n, p, bp.a * bp.b)
    b_n = (-gc.g5 * p.u**2 * q2**-n * (1 - q2**n)
           * (1 - q2**n * bp.a) * (1 - q2**n * bp.c))
    return a_n, b_n


# -- overlap expansions ----------------------------------------------------

def overlap_little(n: int, s: int, lp: LittleParams, p: ParamPoint) -> Fraction:
    q2 = p.q**2
    den = qpoch(q2 * lp.b, q2, s) * qpoch(q2, q2, s)
    _check_den(den, what="overlap denominator")
    num = qpoch(q2**-n, q2, s) * qpoch(lp.a * lp.b * q2 ** (n + 1), q2, s)
    return little_prefactor(n, lp, p) * num / den * q2**s


def expand_little(n: int, lp: LittleParams, p: ParamPoint) -> LaurentPoly:
    """``sum_s overlap(n, s) f_s(z)`` with f_s the W0 eigenfunctions at ``p``."""
    total = LaurentPoly()
    for s in range(n + 1):
        total = total + eigenfunction_f(s, p) * overlap_little(n, s, lp, p)
    return total


def overlap_big(n: int, s: int, bp: BigParams, p: ParamPoint) -> Fraction:
    q2 = p.q**2
    den = qpoch(q2 * bp.a, q2, s) * qpoch(q2 * bp.c, q2, s) * qpoch(q2, q2, s)
    _check_den(den, what="overlap denominator")
    num = qpoch(q2**-n, q2, s) * qpoch(bp.a * bp.b * q2 ** (n + 1), q2, s)
    return num / den * q2**s


def big_poly(n: int, bp: BigParams, p: ParamPoint, scale) -> LaurentPoly:
    """``P_n(scale*z; a, b, c; q^2)`` summed as a terminating series."""
    q2 = p.q**2
    total = LaurentPoly()
    for s in range(n + 1):
        total = total + qpoch_poly(scale, q2, s) * overlap_big(n, s, bp, p)
    return total


def big_poly_rescaled(n: int, bp: BigParams, p: ParamPoint) -> LaurentPoly:
    """``P_n(q^2 b z; a, b, c; q^2)``."""
    return big_poly(n, bp, p, p.q**2 * bp.b)


def expand_big(n: int, bp: BigParams, p: ParamPoint) -> LaurentPoly:
    """The same series summed over the W0 eigenfunctions at ``p``."""
    total = LaurentPoly()
    for s in range(n + 1):
        total = total + eigenfunction_f(s, p) * overlap_big(n, s, bp, p)
    return total


# -- direct q-difference equations (independent oracle) --------------------

def qdiff_operator(p: ParamPoint, Bz: dict[int, Fraction], Bbar: dict[int, Fraction]) -> SkewOp:
    """``B(z) T^2 + Bbar(z) T^-2 - (B(z) + Bbar(z))`` in the skew ring."""
    terms = {}
    for j, c in Bz.items():
        terms[(j, 2)] = terms.get((j, 2), 0) + c
        terms[(j, 0)] = terms.get((j, 0), 0) - c
    for j, c in Bbar.items():
        terms[(j, -2)] = terms.get((j, -2), 0) + c
        terms[(j, 0)] = terms.get((j, 0), 0) - c
    return SkewOp(p.q, terms)


def little_qdiff_operator(lp: LittleParams, p: ParamPoint) -> SkewOp:
    q2 = p.q**2
    return qdiff_operator(p, {-1: -lp.a, 0: lp.a * lp.b * q2}, {-1: Fraction(-1), 0: Fraction(1)})


def big_qdiff_operator(bp: BigParams, p: ParamPoint) -> SkewOp:
    q2 = p.q**2
    a, b, c = bp.a, bp.b, bp.c
    Bz = {-2: a * c * q2, -1: -a * (b + c) * q2, 0: a * b * q2}
    Bbar = {-2: a * c * q2 * q2, -1: -(a + c) * q2, 0: Fraction(1)}
    return qdiff_operator(p, Bz, Bbar)


def qdiff_eigenvalue(n: int, ab: Fraction, p: ParamPoint) -> Fraction:
    q2 = p.q**2
    return q2**-n * (1 - q2**n) * (1 - ab * q2 ** (n + 1))


def qdiff_residual_little(n: int, lp: LittleParams, p: ParamPoint, y: LaurentPoly | None = None) -> LaurentPoly:
    y = little_poly(n, lp, p) if y is None else y
    return little_qdiff_operator(lp, p).apply(y) - y * qdiff_eigenvalue(n, lp.a * lp.b, p)


def qdiff_residual_big(n: int, bp: BigParams, p: ParamPoint, y: LaurentPoly | None = None) -> LaurentPoly:
    """Residual of the big q-difference equation for the rescaled polynomial.

    ``y(z) = P_n(q^2 b z)`` is mapped back to ``P_n(x)`` by ``x = q^2 b z``
    before the difference operator in x is applied.
    """
    y = big_poly_rescaled(n, bp, p) if y is None else y
    s = p.q**2 * bp.b
    _check_den(s, what="rescaling")
    P = y.scaled_argument(1 / s)
    return big_qdiff_operator(bp, p).apply(P) - P * qdiff_eigenvalue(n, bp.a * bp.b, p)


def qdiff_check_big(n: int, bp: BigParams, p: ParamPoint) -> VerificationReport:
    return timed(f"big.qdiff[n={n}]", "big q-Jacobi q-difference equation", p,
                 lambda: qdiff_residual_big(n, bp, p))


def qdiff_check_little(n: int, lp: LittleParams, p: ParamPoint) -> VerificationReport:
    return timed(f"little.qdiff[n={n}]", "little q-Jacobi q-difference equation", p,
                 lambda: qdiff_residual_little(n, lp, p))


def little_from_big_residual(n: int, lp: LittleParams, p: ParamPoint) -> LaurentPoly:
    """``p_n(z; a, b) - prefactor * P_n(q^2 b z; b, a, 0)``."""
    swapped = BigParams(lp.b, lp.a, Fraction(0))
    rhs = big_poly(n, swapped, p, p.q**2 * lp.b) * little_prefactor(n, lp, p)
    return little_poly(n, lp, p) - rhs


def little_from_big(n: int, lp: LittleParams, p: ParamPoint) -> VerificationReport:
    return timed(f"big.little_from_big[n={n}]", "little q-Jacobi as a big q-Jacobi special case", p,
                 lambda: little_from_big_residual(n, lp, p))


# -- suites ----------------------------------------------------------------

def verify_little(p: ParamPoint, n_max: int) -> list[VerificationReport]:
    """Little q-Jacobi checks at a little-profile point."""
    lp = little_dictionary(p)
    out = [
        make_report("little.dictionary_matches_point", "little q-Jacobi parameter dictionary", p,
                    (lp.a, lp.b) == (p.pa, p.pb)),
        make_report("little.kappa_alignment", "little q-Jacobi parameter dictionary", p,
                    kappa(p) - p.q**2 * lp.b),
    ]
    G = little_operator(p)
    out.append(timed("little.operator_matches_W", "reduced G1 in shift form", p,
                     lambda: G - operator_via_W(p)))
    W0 = build_W(p, chevalley(p))[0]
    for n in range(n_max + 1):
        y = little_poly(n, lp, p)
        a_n, b_n = bidiag_little(n, p, lp)
        eig = spectrum(n, p, lp.a * lp.b)
        f_n = eigenfunction_f(n, p)
        f_prev = eigenfunction_f(n - 1, p) if n else LaurentPoly()
        lam, nu = w0_monomial_action(n, p)
        out += [
            timed(f"little.eigen[n={n}]", "little q-Jacobi eigen-equation of reduced G1", p,
                  lambda: G.apply(y) - y * eig),
            timed(f"little.qdiff[n={n}]", "little q-Jacobi q-difference equation", p,
                  lambda: qdiff_residual_little(n, lp, p, y)),
            timed(f"little.phi32[n={n}]", "3phi2 form of little q-Jacobi", p,
                  lambda: phi32_little(n, lp, p) - y),
            timed(f"little.expansion[n={n}]", "overlap expansion of little q-Jacobi", p,
                  lambda: expand_little(n, lp, p) - y),
            timed(f"little.W0_eigen[n={n}]", "W0 eigenfunctions", p,
                  lambda: W0.apply(f_n) - f_n * w0_spectrum(n, p)),
            timed(f"little.W0_monomial[n={n}]", "W0 action on monomials", p,
                  lambda: W0.apply(LaurentPoly.monomial(n)) - LaurentPoly({n: lam, n - 1: nu})),
            timed(f"little.bidiag[n={n}]", "bidiagonal action of reduced G1", p,
                  lambda: G.apply(f_n) - f_n * a_n - f_prev * b_n),
            make_report(f"little.spectrum[n={n}]", "bidiagonal diagonal equals spectrum", p, a_n - eig),
        ]
    return out


def verify_big(p: ParamPoint, n_max: int) -> list[VerificationReport]:
    """Big q-Jacobi checks at a big-profile point."""
    bp = big_dictionary(p, rescaled=True)
    out = [
        make_report("big.dictionary_matches_point", "big q-Jacobi parameter dictionary", p,
                    (bp.a, bp.b, bp.c) == (p.pa, p.pb, p.pc)),
        make_report("big.kappa_alignment", "big q-Jacobi parameter dictionary", p,
                    kappa(p) - p.q**2 * bp.b),
    ]
    G = big_operator(p)
    out.append(timed("big.operator_matches_W", "G1 in shift form", p, lambda: G - operator_via_W(p)))
    lp = LittleParams(p.pa, p.pb)
    for n in range(n_max + 1):
        y = big_poly_rescaled(n, bp, p)
        a_n, b_n = bidiag_big(n, p, bp)
        eig = spectrum(n, p, bp.a * bp.b)
        f_n = eigenfunction_f(n, p)
        f_prev = eigenfunction_f(n - 1, p) if n else LaurentPoly()
        out += [
            timed(f"big.eigen[n={n}]", "big q-Jacobi eigen-equation of G1", p,
                  lambda: G.apply(y) - y * eig),
            timed(f"big.qdiff[n={n}]", "big q-Jacobi q-difference equation", p,
                  lambda: qdiff_residual_big(n, bp, p, y)),
            timed(f"big.expansion[n={n}]", "overlap expansion of big q-Jacobi", p,
                  lambda: expand_big(n, bp, p) - y),
            timed(f"big.bidiag[n={n}]", "bidiagonal action of G1", p,
                  lambda: G.apply(f_n) - f_n * a_n - f_prev * b_n),
            make_report(f"big.spectrum[n={n}]", "bidiagonal diagonal equals spectrum", p, a_n - eig),
            little_from_big(n, lp, p),
        ]
    return out
