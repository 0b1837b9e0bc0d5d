from __future__ import annotations

from fractions import Fraction as F

import pytest

from qaw.qcore import DegenerateParameters, ParamPoint, big_point, little_point
from qaw.qjacobi import (BigParams, IncompatiblePoint, LittleParams, big_dictionary, big_operator,
                         big_poly_rescaled, bidiag_big, bidiag_little, eigenfunction_f, expand_big,
                         expand_little, kappa, little_dictionary, little_from_big_residual, little_operator,
                         little_poly, operator_via_W, overlap_big, overlap_little, phi32_little,
                         qdiff_check_big, qdiff_residual_big, qdiff_residual_little, spectrum, verify_big,
                         verify_little, w0_spectrum)
from qaw.skewring import LaurentPoly
from qaw.uqsl2 import build_W, chevalley, g_coeffs

N = 10
HALF = ParamPoint(t=F(1, 2), u=F(1))  # only q = 1/4 matters for the polynomials
LP = LittleParams(F(1, 3), F(1, 5))


def failures(reports):
    return [(r.check_name, r.residual_summary) for r in reports if not r.passed]


# -- little ----------------------------------------------------------------

def test_little_poly_low_degrees():
    q = HALF.q
    a, b = LP.a, LP.b
    assert little_poly(0, LP, HALF) == LaurentPoly.const(1)
    assert little_poly(1, LP, HALF) == LaurentPoly({0: 1, 1: -(1 - a * b * q**4) / (1 - a * q**2)})
    assert little_poly(1, LP, HALF)[1] == F(-3839, 3760)


def test_little_poly_degree_two_frozen():
    # solved independently from the q-difference equation with y(0) = 1
    y = little_poly(2, LP, HALF)
    assert y == LaurentPoly({0: 1, 1: F(-1044463, 60160), 2: F(60396933121, 3691417600)})


def test_three_routes_agree(little):
    lp = little_dictionary(little)
    for n in range(N + 1):
        y = little_poly(n, lp, little)
        assert y.degree() == n and y[0] == 1
        assert phi32_little(n, lp, little) == y
        assert expand_little(n, lp, little) == y


def test_phi32_low_degrees():
    assert phi32_little(0, LP, HALF) == LaurentPoly.const(1)
    assert phi32_little(1, LP, HALF) == little_poly(1, LP, HALF)


def test_little_eigen_and_qdiff(little):
    lp = little_dictionary(little)
    G = little_operator(little)
    assert G == operator_via_W(little)
    for n in range(N + 1):
        y = little_poly(n, lp, little)
        a_n = g_coeffs(little).g5 * little.u**2 * (little.q ** (-2 * n) + lp.a * lp.b * little.q ** (2 * n + 2)) \
            + g_coeffs(little).g6
        assert G.apply(y) == y * a_n
        assert qdiff_residual_little(n, lp, little).is_zero()


def test_little_qdiff_detects_wrong_polynomial():
    y = little_poly(3, LP, HALF) + LaurentPoly.monomial(1, F(1, 100))
    assert not qdiff_residual_little(3, LP, HALF, y).is_zero()


def test_little_dictionary_round_trip(little):
    lp = little_dictionary(little)
    assert (lp.a, lp.b) == (little.pa, little.pb)
    assert kappa(little) == little.q**2 * lp.b


def test_little_dictionary_rejects_incompatible(little):
    with pytest.raises(IncompatiblePoint):
        little_dictionary(little.with_(eps1=little.eps1 * 2))


def test_little_forward_round_trip_explicit():
    p = little_point(F(2, 3), F(5, 7), F(-3, 4), F(2, 9), cb0=F(3), c1=F(-1, 2))
    lp = little_dictionary(p)
    assert (lp.a, lp.b) == (F(-3, 4), F(2, 9))


def test_eigenfunctions(little):
    W0, _ = build_W(little, chevalley(little))
    assert eigenfunction_f(0, little) == LaurentPoly.const(1)
    assert w0_spectrum(0, little) == little.eps0 / little.u**2
    for n in range(N + 1):
        f = eigenfunction_f(n, little)
        assert W0.apply(f) == f * w0_spectrum(n, little)


def test_bidiagonal_little(little):
    lp = little_dictionary(little)
    G = little_operator(little)
    assert bidiag_little(0, little, lp)[1] == 0
    f = [eigenfunction_f(n, little) for n in range(N + 1)]
    for n in range(N + 1):
        a_n, b_n = bidiag_little(n, little, lp)
        assert a_n == spectrum(n, little, lp.a * lp.b)
        assert G.apply(f[n]) == f[n] * a_n + (f[n - 1] * b_n if n else LaurentPoly())


def test_overlaps_little(little):
    lp = little_dictionary(little)
    assert overlap_little(0, 0, lp, little) == 1
    for n in range(5):
        for s in range(n + 1, n + 4):
            assert overlap_little(n, s, lp, little) == 0


def test_little_suite(little):
    reports = verify_little(little, N)
    assert failures(reports) == []
    assert len(reports) == 3 + 8 * (N + 1)


# -- big -------------------------------------------------------------------

def test_big_poly_degree_zero_and_normalization():
    bp = BigParams(F(1, 3), F(1, 5), F(2, 7))
    assert big_poly_rescaled(0, bp, HALF) == LaurentPoly.const(1)
    for n in range(6):
        # P_n(1) = 1, i.e. the rescaled polynomial is 1 at z = 1/(q^2 b)
        assert big_poly_rescaled(n, bp, HALF)(1 / (HALF.q**2 * bp.b)) == 1


def test_big_poly_degree_two_frozen():
    # ratios solved independently from the q-difference equation
    y = big_poly_rescaled(2, BigParams(F(1, 3), F(1, 5), F(2, 7)), HALF)
    assert y[1] / y[0] == F(-40511586381, 34780699040)
    assert y[2] / y[0] == F(2959449722929, 8347367769600)


def test_big_eigen_qdiff_expansion(big):
    bp = big_dictionary(big)
    G = big_operator(big)
    assert G == operator_via_W(big)
    for n in range(N + 1):
        y = big_poly_rescaled(n, bp, big)
        assert G.apply(y) == y * spectrum(n, big, bp.a * bp.b)
        assert qdiff_residual_big(n, bp, big).is_zero()
        assert expand_big(n, bp, big) == y
    assert qdiff_check_big(0, bp, big).passed


def test_bidiagonal_big(big):
    bp = big_dictionary(big)
    G = big_operator(big)
    assert bidiag_big(0, big, bp)[1] == 0
    f = [eigenfunction_f(n, big) for n in range(N + 1)]
    for n in range(1, N + 1):
        a_n, b_n = bidiag_big(n, big, bp)
        assert G.apply(f[n]) == f[n] * a_n + f[n - 1] * b_n


def test_overlaps_big(big):
    bp = big_dictionary(big)
    assert overlap_big(0, 0, bp, big) == 1
    for n in range(5):
        assert overlap_big(n, n + 1, bp, big) == 0


def test_big_dictionary_round_trip(big):
    bp = big_dictionary(big, rescaled=True)
    assert (bp.a, bp.b, bp.c) == (big.pa, big.pb, big.pc)


def test_big_forward_round_trip_up_to_swap():
    for pa, pb, pc in ((F(1, 3), F(1, 5), F(2)), (F(-4, 5), F(3, 2), F(1, 7)), (F(7), F(-2, 9), F(-1, 2))):
        p = big_point(F(2, 3), F(5, 4), pa, pb, pc, cb0=F(-2), c1=F(3, 5))
        bp = big_dictionary(p)
        assert bp.a * bp.b == pa * pb
        assert {bp.a / bp.b, bp.c / bp.b} == {pa / pb, pc / pb}


def test_unrescaled_dictionary():
    # with b = q^-2 the rescaling is trivial (kappa = 1) and both readings agree;
    # a(b + c) = ab + ac makes both roots admissible, so the smaller one is a
    t = F(3)
    q = t * t
    p = big_point(t, F(2, 5), F(7), 1 / q**2, F(-1, 2))
    assert kappa(p) == 1
    assert big_dictionary(p, rescaled=True) == BigParams(F(7), 1 / q**2, F(-1, 2))
    bp = big_dictionary(p, rescaled=False)
    assert bp.a == F(-1, 2) and bp.c == F(7) and bp.a * bp.b == F(7) / q**2


def test_unrescaled_dictionary_incompatible(big):
    with pytest.raises(IncompatiblePoint):
        big_dictionary(big, rescaled=False)


def test_c_zero_degenerates_g1():
    p = big_point(F(1, 2), F(3, 5), F(1, 3), F(1, 5), F(0))
    assert p.cb1 == 0 and g_coeffs(p).g1 == 0


def test_little_from_big():
    for n in range(N + 1):
        assert little_from_big_residual(n, LP, HALF).is_zero()


def test_big_suite(big):
    reports = verify_big(big, N)
    assert failures(reports) == []
    assert len(reports) == 3 + 6 * (N + 1)


def test_degenerate_denominator():
    with pytest.raises(DegenerateParameters):
        little_poly(2, LittleParams(F(16), F(1, 5)), HALF)  # 1 - a q^2 = 0
