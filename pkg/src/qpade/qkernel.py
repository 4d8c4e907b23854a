"""Finite q-products, node values, Taylor coefficients and terminating 3phi2 sums.

The q-Pochhammer symbol uses the standard convention
``(z)_j = (1 - z)(1 - q z) ... (1 - q^(j-1) z)``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple, TypeVar

from .exact import Number, as_fraction

T = TypeVar("T")

DEFAULT_ROOT_BOUND = 12


class Inadmissible(ValueError):
    """Parameters hit a root of unity, a zero parameter or a vanishing denominator."""


class SamplingExhausted(RuntimeError):
    """No admissible parameter set was found within the retry cap."""


def qpoch(z: Number, j: int, q: Number) -> Fraction:
    if j < 0:
        raise ValueError("negative Pochhammer length")
    z = as_fraction(z)
    q = as_fraction(q)
    out = Fraction(1)
    qk = Fraction(1)
    for _ in range(j):
        out *= 1 - qk * z
        qk *= q
    return out


def qpoch_list(zs: Sequence[Number], j: int, q: Number) -> Fraction:
    out = Fraction(1)
    for z in zs:
        out *= qpoch(z, j, q)
    return out


def poch1(*zs: Number) -> Fraction:
    """``(z1, z2, ...)_1``, which does not depend on q."""
    out = Fraction(1)
    for z in zs:
        out *= 1 - as_fraction(z)
    return out


@dataclass(frozen=True)
class ParamSet:
    """Configuration ``(q, a1..a4, m, n)`` of both Padé problems."""

    q: Fraction
    a1: Fraction
    a2: Fraction
    a3: Fraction
    a4: Fraction
    m: int
    n: int

    def __post_init__(self):
        for name in ("q", "a1", "a2", "a3", "a4"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))
        if self.m < 0 or self.n < 0:
            raise Inadmissible("m and n must be non-negative")

    @property
    def N(self) -> int:
        return self.m + self.n

    @property
    def a(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a1, self.a2, self.a3, self.a4)

    def with_(self, **kw) -> "ParamSet":
        return replace(self, **kw)

    def check(self, bound: Optional[int] = None) -> "ParamSet":
        """Raise Inadmissible unless q is generic and all node values exist."""
        q = self.q
        if q in (0, 1, -1):
            raise Inadmissible("q must avoid 0 and +-1")
        if any(a == 0 for a in self.a):
            raise Inadmissible("a_i must be non-zero")
        bound = max(bound or DEFAULT_ROOT_BOUND, self.N + 3)
        qk = Fraction(1)
        for _ in range(bound):
            qk *= q
            if qk == 1:
                raise Inadmissible("q is a root of unity within the bound")
        for k in range(self.N + 1):
            if qpoch_list((self.a1, self.a2), k, q) == 0:
                raise Inadmissible("vanishing node-value denominator")
        return self

    def as_dict(self) -> Dict[str, str]:
        return {
            "q": str(self.q),
            "a1": str(self.a1),
            "a2": str(self.a2),
            "a3": str(self.a3),
            "a4": str(self.a4),
            "m": str(self.m),
            "n": str(self.n),
        }


def y_nodes(p: ParamSet) -> List[Fraction]:
    """Values ``Y(q^i) = (a3, a4)_i / (a1, a2)_i`` for ``i = 0..N``."""
    return [y_at_power(p, i) for i in range(p.N + 1)]


def y_at_power(p: ParamSet, k: int) -> Fraction:
    """``Y(q^k)`` for the E6 function, any integer k.

    Uses ``Y(qx)/Y(x) = (a3 x, a4 x)_1 / (a1 x, a2 x)_1`` starting from Y(1) = 1.
    """
    q = p.q
    val = Fraction(1)
    if k >= 0:
        for i in range(k):
            x = q**i
            den = poch1(p.a1 * x, p.a2 * x)
            if den == 0:
                raise Inadmissible("vanishing node-value denominator")
            val *= poch1(p.a3 * x, p.a4 * x) / den
    else:
        for i in range(1, -k + 1):
            x = q ** (-i)
            num = poch1(p.a3 * x, p.a4 * x)
            if num == 0:
                raise Inadmissible("Y has a pole at this power of q")
            val *= poch1(p.a1 * x, p.a2 * x) / num
    return val


def taylor_Y_d5(p: ParamSet, order: int) -> List[Fraction]:
    """Taylor coefficients c_0..c_order of ``(a1 x, a2 x)_inf / (a3 x, a4 x)_inf``.

    Obtained from ``Y(qx)(1-a1 x)(1-a2 x) = Y(x)(1-a3 x)(1-a4 x)``.
    """
    q = p.q
    s12, p12 = p.a1 + p.a2, p.a1 * p.a2
    s34, p34 = p.a3 + p.a4, p.a3 * p.a4
    c = [Fraction(1)]
    for k in range(1, order + 1):
        denom = q**k - 1
        if denom == 0:
            raise Inadmissible("q^k = 1 inside the requested order")
        acc = (s12 * q ** (k - 1) - s34) * c[k - 1]
        if k >= 2:
            acc += (p34 - p12 * q ** (k - 2)) * c[k - 2]
        c.append(acc / denom)
    return c


def taylor_Y_d5_float(p: ParamSet, x: float, factors: int = 100) -> float:
    """Truncated-product float value of the D5 Y(x); a sanity oracle only."""
    q = float(p.q)
    a1, a2, a3, a4 = (float(a) for a in p.a)
    out = 1.0
    qk = 1.0
    for _ in range(factors):
        out *= (1 - a1 * qk * x) * (1 - a2 * qk * x) / ((1 - a3 * qk * x) * (1 - a4 * qk * x))
        qk *= q
    return out


def phi32(
    num: Sequence[Number], den: Sequence[Number], x: Number, terms: int, q: Number
) -> Fraction:
    """Partial sum ``sum_{s=0}^{terms} (a1,a2,a3)_s / (b1,b2,q)_s x^s``."""
    a1, a2, a3 = (as_fraction(v) for v in num)
    b1, b2 = (as_fraction(v) for v in den)
    q = as_fraction(q)
    x = as_fraction(x)
    total = Fraction(0)
    term = Fraction(1)
    qs = Fraction(1)
    for s in range(terms + 1):
        total += term
        d = (1 - b1 * qs) * (1 - b2 * qs) * (1 - q * qs)
        if d == 0:
            if s == terms:
                break
            raise ZeroDivisionError("vanishing 3phi2 denominator")
        term = term * (1 - a1 * qs) * (1 - a2 * qs) * (1 - a3 * qs) * x / d
        qs *= q
    return total


def f_prime_node(s: int, N: int, q: Number) -> Fraction:
    """``F'(q^s)`` for ``F(x) = prod_{i=0}^N (x - q^i)``, via ``q^-s (q)_s (q)_N / (q^-N)_s``."""
    if not 0 <= s <= N:
        raise ValueError("need 0 <= s <= N")
    q = as_fraction(q)
    return q ** (-s) * qpoch(q, s, q) * qpoch(q, N, q) / qpoch(q ** (-N), s, q)


def random_rational(rng: random.Random, bound: int = 20, nonzero: bool = True) -> Fraction:
    while True:
        num = rng.randint(-bound, bound)
        den = rng.randint(1, bound)
        if num == 0 and nonzero:
            continue
        return Fraction(num, den)


def sample_params(
    rng: random.Random,
    m: int,
    n: int,
    accept: Optional[Callable[[ParamSet], T]] = None,
    retries: int = 50,
    bound: int = 20,
):
    """Draw an admissible ParamSet; ``accept`` may raise to force a resample.

    Returns ``(params, accept(params))`` when ``accept`` is given, otherwise
    just the params.
    """
    last: Optional[BaseException] = None
    for _ in range(retries):
        q = random_rational(rng, bound)
        a = [random_rational(rng, bound) for _ in range(4)]
        try:
            p = ParamSet(q, *a, m=m, n=n).check()
            if accept is None:
                return p
            return p, accept(p)
        except (ArithmeticError, ValueError) as exc:
            last = exc
    raise SamplingExhausted(f"no admissible parameters after {retries} draws: {last}")
