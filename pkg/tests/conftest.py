from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from qpade.qkernel import ParamSet, sample_params


def rationals(bound: int = 12, nonzero: bool = False):
    s = st.builds(Fraction, st.integers(-bound, bound), st.integers(1, bound))
    return s.filter(lambda v: v != 0) if nonzero else s


def q_values(bound: int = 12):
    return rationals(bound, nonzero=True).filter(lambda v: v not in (1, -1))


@pytest.fixture
def rng():
    return random.Random(20240601)


def params_for(seed: int, m: int, n: int, accept=None):
    rng = random.Random(f"tests/{seed}/{m}/{n}")
    return sample_params(rng, m, n, accept=accept)


@pytest.fixture
def p11() -> ParamSet:
    return ParamSet(Fraction(2, 5), Fraction(2), Fraction(3), Fraction(5), Fraction(7), m=1, n=1).check()
