from __future__ import annotations

import sys
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from qaw.qcore import sample_point

SEEDS = (1, 2, 3)


def rationals(lo: int = 1, hi: int = 9, nonzero: bool = True):
    nums = st.integers(-hi, hi).filter(lambda n: n != 0) if nonzero else st.integers(-hi, hi)
    return st.builds(Fraction, nums, st.integers(lo, hi))


@pytest.fixture(params=SEEDS, ids=lambda s: f"seed{s}")
def seed(request):
    return request.param


@pytest.fixture
def general(seed):
    return sample_point(seed, "general")


@pytest.fixture
def little(seed):
    return sample_point(seed, "little")


@pytest.fixture
def big(seed):
    return sample_point(seed, "big")


@pytest.fixture
def equit(seed):
    return sample_point(seed, "equitable")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod and mod.LINES:
        terminalreporter.section("acceptance criteria")
        for line in mod.LINES:
            terminalreporter.write_line(line)
