from __future__ import annotations

from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import rationals
from qaw.qcore import (PROFILES, DegenerateParameters, ParamPoint, big_point, equitable_point, fmt,
                       little_point, omega, qpoch, sample_point, screen_degeneracies, to_scalar)
from qaw.uqsl2 import g_coeffs


def test_qpoch_examples():
    assert qpoch(F(1, 2), F(1, 3), 2) == F(5, 12)
    assert qpoch(F(7, 3), F(2), 0) == 1
    assert qpoch(1, F(1, 2), 3) == 0


@given(rationals(), rationals(), st.integers(0, 8))
def test_qpoch_recurrence(a, qq, n):
    assert qpoch(a, qq, n + 1) == qpoch(a, qq, n) * (1 - a * qq**n)


def test_qpoch_rejects_negative_length():
    with pytest.raises(ValueError):
        qpoch(F(1, 2), F(1, 3), -1)


@given(rationals(), rationals(), rationals())
def test_field_axioms(x, y, w):
    assert (x + y) * w == x * w + y * w
    assert x * (y * w) == (x * y) * w
    assert x * (1 / x) == 1
    r = x / y
    assert r.denominator > 0
    assert F(r.numerator, r.denominator) == r


def test_to_scalar_and_fmt():
    assert to_scalar("3/4") == F(3, 4)
    assert to_scalar("−1/2") == F(-1, 2)
    assert to_scalar(2) == 2
    assert fmt(F(-6, 4)) == "-3/2"
    assert fmt(F(5)) == "5"
    with pytest.raises((ValueError, ZeroDivisionError)):
        to_scalar("1/0")


def test_screen_examples():
    assert not screen_degeneracies(ParamPoint(t=F(1), u=F(2)))
    assert not screen_degeneracies(ParamPoint(t=F(0), u=F(2)))
    t = F(1, 2)
    assert not screen_degeneracies(ParamPoint(t=t, u=t))  # u^2 = q
    assert not screen_degeneracies(ParamPoint(t=t, u=F(0)))
    assert screen_degeneracies(ParamPoint(t=t, u=F(3, 7), a=F(2), b=F(-1, 3), c=F(5)))


@pytest.mark.parametrize("profile", PROFILES)
def test_sample_point_deterministic(profile):
    for seed in (1, 2, 3, 17):
        p1, p2 = sample_point(seed, profile), sample_point(seed, profile)
        assert p1 == p2 and p1.digest() == p2.digest()
        assert p1.seed == seed and p1.profile == profile
        assert screen_degeneracies(p1)
    assert len({sample_point(s, profile).digest() for s in (1, 2, 3)}) == 3


def test_sample_point_profile_zeros():
    for seed in (1, 2, 3):
        lp = sample_point(seed, "little")
        assert lp.c0 == lp.cb1 == lp.mu0 == 0
        bp = sample_point(seed, "big")
        assert bp.c0 == bp.mu0 == 0 and bp.cb1 != 0
        gp = sample_point(seed, "general")
        assert all(getattr(gp, k) != 0 for k in ("c0", "cb0", "c1", "cb1", "eps0", "eps1", "mu0", "mu1"))


def test_sample_point_unknown_profile():
    with pytest.raises(ValueError):
        sample_point(1, "medium")


def test_digest_ignores_seed_and_profile():
    p = sample_point(4, "general")
    assert p.with_(seed=99, profile="little").digest() == p.digest()
    assert p.with_(mu0=p.mu0 + 1).digest() != p.digest()


def test_omega_closed_form():
    p = ParamPoint(t=F(1, 2), u=F(3))
    q = F(1, 4)
    assert omega(p) == (q * 9 + 1 / (q * 9)) / (q - 1 / q) ** 2


def test_forward_points_have_expected_profile():
    lp = little_point(F(1, 2), F(3, 5), F(1, 3), F(1, 5), cb0=F(2), c1=F(-1, 3))
    assert lp.profile == "little" and lp.c0 == lp.cb1 == lp.mu0 == 0
    bp = big_point(F(1, 2), F(3, 5), F(1, 3), F(1, 5), F(4))
    assert bp.profile == "big" and bp.cb1 != 0


def test_equitable_point_matches_g_values():
    p = equitable_point(F(2, 3), F(5, 4), b=F(3), c=F(-2, 7), cb0=F(1, 2))
    g = g_coeffs(p)
    t, q = p.t, p.q
    assert g.g5 == 1 / p.b and g.g4 == p.b and g.g6 == 0
    assert g.g2 == (1 - q**-2) * t / p.b
    assert g.g3 == -(t**-3) * p.dq * p.c / p.a


def test_degenerate_error_is_value_error():
    assert issubclass(DegenerateParameters, ValueError)
