"""Autonomous limit: QRT maps on pencils of bidegree-(2,2) curves.

A curve is stored as its coefficient grid ``c[i][j]`` of ``x^i y^j``. Base
points at infinity never appear as values; each becomes a linear condition on
the top-degree coefficients.
"""
from __future__ import annotations

import csv
import io
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .exact import as_fraction, frac_str, nullspace
from .qkernel import SamplingExhausted, random_rational
from .verify import CheckReport

QP6 = "qp6"
E6 = "e6"
VARIANTS = (QP6, E6)


class ConditionViolated(ArithmeticError):
    """The eight point conditions do not leave a pencil (dimension != 2)."""

    def __init__(self, msg: str, dimension: int):
        super().__init__(msg)
        self.dimension = dimension


class BasePoint(ArithmeticError):
    """The start point lies on every member of the pencil."""


class FiberDegenerate(ArithmeticError):
    """The fibre quadratic lost its leading term; the second root is at infinity."""


@dataclass(frozen=True)
class BiPoly22:
    c: Tuple[Tuple[Fraction, ...], ...]

    @classmethod
    def from_flat(cls, v: Sequence[Fraction]) -> "BiPoly22":
        return cls(tuple(tuple(as_fraction(v[3 * i + j]) for j in range(3)) for i in range(3)))

    def flat(self) -> List[Fraction]:
        return [self.c[i][j] for i in range(3) for j in range(3)]

    def __call__(self, x, y) -> Fraction:
        return sum((self.c[i][j] * x**i * y**j for i in range(3) for j in range(3)), Fraction(0))

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.flat())

    def lin(self, a: Fraction, other: "BiPoly22", b: Fraction) -> "BiPoly22":
        return BiPoly22.from_flat([a * u + b * v for u, v in zip(self.flat(), other.flat())])

    def in_y(self, x) -> Tuple[Fraction, Fraction, Fraction]:
        """Coefficients of y^0, y^1, y^2 at fixed x."""
        return tuple(sum((self.c[i][j] * x**i for i in range(3)), Fraction(0)) for j in range(3))

    def in_x(self, y) -> Tuple[Fraction, Fraction, Fraction]:
        return tuple(sum((self.c[i][j] * y**j for j in range(3)), Fraction(0)) for i in range(3))


def _grid(entries) -> BiPoly22:
    v = [Fraction(0)] * 9
    for (i, j), val in entries.items():
        v[3 * i + j] = Fraction(val)
    return BiPoly22.from_flat(v)


BASE = {
    QP6: _grid({(1, 1): 1}),
    E6: _grid({(1, 1): 1, (2, 2): -1}),
}


@dataclass(frozen=True)
class QRTConfig:
    variant: str
    a: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        if len(self.a) != 8:
            raise ValueError("need eight parameters a1..a8")
        object.__setattr__(self, "a", tuple(as_fraction(v) for v in self.a))

    def with_a(self, index: int, value) -> "QRTConfig":
        """Copy with a_index (1-based) replaced."""
        a = list(self.a)
        a[index - 1] = as_fraction(value)
        return QRTConfig(self.variant, tuple(a))


def condition_value(cfg: QRTConfig) -> Fraction:
    a1, a2, a3, a4, a5, a6, a7, a8 = cfg.a
    if cfg.variant == QP6:
        return a1 * a2 * a7 * a8 / (a3 * a4 * a5 * a6)
    return a3 * a4 * a5 * a6 * a7 * a8 / (a1 * a2)


def point_conditions(cfg: QRTConfig) -> List[List[Fraction]]:
    """One linear row per base point, over the flattened grid (index 3i+j)."""
    a1, a2, a3, a4, a5, a6, a7, a8 = cfg.a
    rows = []

    def row(fn):
        rows.append([Fraction(fn(i, j)) for i in range(3) for j in range(3)])

    for x0 in (a1, a2):
        row(lambda i, j, x0=x0: x0**i if j == 0 else 0)
    for y0 in (a3, a4):
        row(lambda i, j, y0=y0: y0**j if i == 0 else 0)
    if cfg.variant == QP6:
        for x0 in (a5, a6):  # (x0, oo): top y-coefficient vanishes at x0
            row(lambda i, j, x0=x0: x0**i if j == 2 else 0)
        for y0 in (a7, a8):
            row(lambda i, j, y0=y0: y0**j if i == 2 else 0)
    else:
        for t in (a5, a6, a7, a8):  # t^2 F(t, 1/t)
            row(lambda i, j, t=t: t ** (i - j + 2))
    return rows


def pencil(cfg: QRTConfig) -> Tuple[BiPoly22, BiPoly22]:
    """(F, base) spanning the curves through the eight points.

    F has a zero coefficient at the base's (1,1) slot and is scaled so that its
    first nonzero coefficient in the order x^0 y^0, x^0 y^1, ... is 1 after
    putting x^2 first (matching ``x^2 - (a1+a2) x + a1 a2 + ...``).
    """
    basis = nullspace(point_conditions(cfg), 9)
    if len(basis) != 2:
        raise ConditionViolated(
            f"point conditions leave dimension {len(basis)} (condition value {condition_value(cfg)})",
            len(basis),
        )
    base = BASE[cfg.variant]
    pivot = 3 * 1 + 1
    cand = None
    for v in basis:
        w = BiPoly22.from_flat(v)
        w = w.lin(Fraction(1), base, -w.c[1][1] / base.c[1][1])
        if not w.is_zero():
            cand = w
            break
    assert cand is not None and cand.flat()[pivot] == 0
    flat = cand.flat()
    lead = flat[6] if flat[6] != 0 else next(v for v in flat if v != 0)
    F = BiPoly22.from_flat([v / lead for v in flat])
    return F, base


def lambda_of(cfg: QRTConfig, x0, y0, pen=None) -> Fraction:
    F, base = pen or pencil(cfg)
    b = base(x0, y0)
    if b == 0:
        raise BasePoint(f"({x0}, {y0}) lies on the base curve")
    return -F(x0, y0) / b


def member(pen, lam) -> BiPoly22:
    F, base = pen
    return F.lin(Fraction(1), base, lam)


def _other_root(coeffs, r0) -> Fraction:
    c0, c1, c2 = coeffs
    if c2 == 0:
        raise FiberDegenerate("leading fibre coefficient vanishes")
    if r0 != 0:
        return c0 / (c2 * r0)
    return -c1 / c2 - r0


def _poly_y(coeffs, t) -> Fraction:
    return coeffs[0] + coeffs[1] * t + coeffs[2] * t**2


def fibre(cfg: QRTConfig, pen, x0, y0, axis: str) -> Tuple[Fraction, Fraction, Fraction]:
    """Quadratic (constant, linear, leading) cut out on the line through (x0, y0).

    With beta = base/x (vertical) or base/y (horizontal) the member through
    (x0, y0) restricted to the line is, after clearing lambda,
    ``beta(p0) F(line) - beta(line) F(p0)``. This stays meaningful on the
    base curve, e.g. at x0 = 0.
    """
    F, base = pen
    x0, y0 = as_fraction(x0), as_fraction(y0)
    if axis == "vertical":
        Fl = F.in_y(x0)
        r0, t0 = y0, x0
    else:
        Fl = F.in_x(y0)
        r0, t0 = x0, y0
    # both bases are divisible by x and by y: beta(line) = base-fibre / t0
    beta = [_divide_fixed(base, axis, k, t0) for k in range(3)]
    b0 = _poly_y(beta, r0)
    F0 = _poly_y(Fl, r0)
    return tuple(b0 * Fl[k] - beta[k] * F0 for k in range(3))


def _divide_fixed(base: BiPoly22, axis: str, k: int, t0: Fraction) -> Fraction:
    # coefficient of r^k in base(line)/t0, computed without dividing by t0
    if axis == "vertical":
        return sum((base.c[i][k] * t0 ** (i - 1) for i in range(1, 3)), Fraction(0))
    return sum((base.c[k][j] * t0 ** (j - 1) for j in range(1, 3)), Fraction(0))


def vertical_switch(cfg: QRTConfig, x0, y0, pen=None) -> Fraction:
    """Second intersection of the member through (x0, y0) with x = x0 (root product/sum)."""
    pen = pen or pencil(cfg)
    return _other_root(fibre(cfg, pen, x0, y0, "vertical"), as_fraction(y0))


def horizontal_switch(cfg: QRTConfig, x0, y0, pen=None) -> Fraction:
    pen = pen or pencil(cfg)
    return _other_root(fibre(cfg, pen, x0, y0, "horizontal"), as_fraction(x0))


def closed_vertical(cfg: QRTConfig, x0, y0) -> Fraction:
    a1, a2, a3, a4, a5, a6, a7, a8 = cfg.a
    if cfg.variant == QP6:
        return (x0 - a1) * (x0 - a2) * a7 * a8 / ((x0 - a5) * (x0 - a6) * y0)
    R = (x0 - a5) * (x0 - a6) * (x0 - a7) * (x0 - a8) / ((x0 - a1) * (x0 - a2))
    u = x0 * y0 - 1
    return u / (x0 * u - R * y0)


def closed_horizontal(cfg: QRTConfig, x0, y0) -> Fraction:
    a1, a2, a3, a4, a5, a6, a7, a8 = cfg.a
    if cfg.variant == QP6:
        # the denominator carries the y-values of the points at x = oo
        return a5 * a6 * (y0 - a3) * (y0 - a4) / ((y0 - a7) * (y0 - a8) * x0)
    # y0 -> 0 must give x0 x1 = a1 a2, which fixes the constant
    S = (y0 - 1 / a5) * (y0 - 1 / a6) * (y0 - 1 / a7) * (y0 - 1 / a8) / ((y0 - a3) * (y0 - a4))
    u = x0 * y0 - 1
    return u / (y0 * u - S * x0)


def reference_horizontal(cfg: QRTConfig, x0, y0) -> Fraction:
    """Horizontal switch in its uncorrected reference form; kept for comparison only.

    qp6: (y0-a5)(y0-a6) in the denominator. e6: (y0 a_i - 1) factors, which
    differ from the correct right-hand side by a5 a6 a7 a8.
    """
    a1, a2, a3, a4, a5, a6, a7, a8 = cfg.a
    if cfg.variant == QP6:
        return a5 * a6 * (y0 - a3) * (y0 - a4) / ((y0 - a5) * (y0 - a6) * x0)
    S = (y0 * a5 - 1) * (y0 * a6 - 1) * (y0 * a7 - 1) * (y0 * a8 - 1) / ((y0 - a3) * (y0 - a4))
    u = x0 * y0 - 1
    return u / (y0 * u - S * x0)


@dataclass(frozen=True)
class OrbitPoint:
    step: int
    x: Fraction
    y: Fraction
    lam: Fraction
    closed_form_ok: bool = True


def _closed_agrees(fn, cfg, x0, y0, oracle) -> bool:
    try:
        return fn(cfg, x0, y0) == oracle
    except ZeroDivisionError:
        # closed form undefined here; the oracle value stands
        return True


def orbit(cfg: QRTConfig, x0, y0, steps: int) -> List[OrbitPoint]:
    """Iterate (x, y) -> (x', y') with x' the horizontal switch, then y' the vertical one."""
    if steps < 0:
        raise ValueError("steps must be >= 0")
    pen = pencil(cfg)
    x, y = as_fraction(x0), as_fraction(y0)
    out = [OrbitPoint(0, x, y, lambda_of(cfg, x, y, pen))]
    for k in range(1, steps + 1):
        x1 = horizontal_switch(cfg, x, y, pen)
        ok = _closed_agrees(closed_horizontal, cfg, x, y, x1)
        y1 = vertical_switch(cfg, x1, y, pen)
        ok = _closed_agrees(closed_vertical, cfg, x1, y, y1) and ok
        x, y = x1, y1
        out.append(OrbitPoint(k, x, y, lambda_of(cfg, x, y, pen), ok))
    return out


def orbit_csv(points: Sequence[OrbitPoint]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["step", "x", "y", "lambda"])

    for pt in points:
        w.writerow([pt.step, frac_str(pt.x), frac_str(pt.y), frac_str(pt.lam)])
    return buf.getvalue()


def sample_config(rng: random.Random, variant: str, bound: int = 9, retries: int = 100) -> QRTConfig:
    """Random a1..a7 with a8 solved from the condition; rejects coincident points."""
    for _ in range(retries):
        a = [random_rational(rng, bound) for _ in range(7)]
        if variant == QP6:
            a8 = a[2] * a[3] * a[4] * a[5] / (a[0] * a[1] * a[6])
        else:
            a8 = a[0] * a[1] / (a[2] * a[3] * a[4] * a[5] * a[6])
        full = a + [a8]
        if len(set(full[:2])) < 2 or len(set(full[2:4])) < 2 or len(set(full[4:])) < 4:
            continue
        cfg = QRTConfig(variant, tuple(full))
        try:
            pencil(cfg)
        except ConditionViolated:
            continue
        return cfg
    raise SamplingExhausted("could not sample a non-degenerate configuration")


def sample_start(rng: random.Random, cfg: QRTConfig, bound: int = 9) -> Tuple[Fraction, Fraction]:
    """A start point off the base curve and off every line through a base point."""
    pen = pencil(cfg)
    special = set(cfg.a) | {1 / a for a in cfg.a} | {Fraction(0)}
    while True:
        x0, y0 = random_rational(rng, bound), random_rational(rng, bound)
        if x0 in special or y0 in special or pen[1](x0, y0) == 0:
            continue
        return x0, y0


def _cfg_params(cfg: QRTConfig) -> dict:
    d = {"variant": cfg.variant}
    d.update({f"a{i + 1}": frac_str(v) for i, v in enumerate(cfg.a)})
    return d


def qrt_checks(cfg: QRTConfig, x0, y0, steps: int):
    """Reports for one configuration and start point, plus the orbit itself.

    Raises ConditionViolated when the configuration does not carry a pencil.
    """
    params = _cfg_params(cfg)

    def rep(name, ok, lhs="", rhs="", **witness):
        return CheckReport(name, params, "pass" if ok else "fail", lhs, rhs, {k: str(v) for k, v in witness.items()})

    out = []
    cond = condition_value(cfg)
    dim = len(nullspace(point_conditions(cfg), 9))
    out.append(rep("qrt_condition", cond == 1, frac_str(cond), "1"))
    out.append(rep("qrt_pencil_dimension", dim == 2, str(dim), "2"))
    broken = cfg.with_a(8, 2 * cfg.a[7])
    bdim = len(nullspace(point_conditions(broken), 9))
    out.append(rep("qrt_pencil_dimension_broken", bdim == 1, str(bdim), "1", a8="doubled"))
    if dim != 2:
        out.append(rep("qrt_condition_violated", False, str(dim), "2", error=f"ConditionViolated: dimension {dim}"))
        return out, []

    pts = orbit(cfg, x0, y0, steps)
    lams = {pt.lam for pt in pts}
    out.append(rep("qrt_lambda_conserved", len(lams) == 1, frac_str(pts[-1].lam), frac_str(pts[0].lam), steps=steps))
    bad = [pt.step for pt in pts if not pt.closed_form_ok]
    out.append(rep("qrt_closed_forms_match_oracle", not bad, ",".join(map(str, bad)), "", steps=steps))

    pen = pencil(cfg)
    x, y = as_fraction(x0), as_fraction(y0)
    xh = horizontal_switch(cfg, x, y, pen)
    yv = vertical_switch(cfg, x, y, pen)
    out.append(rep("qrt_horizontal_involution", horizontal_switch(cfg, xh, y, pen) == x, frac_str(horizontal_switch(cfg, xh, y, pen)), frac_str(x)))
    out.append(rep("qrt_vertical_involution", vertical_switch(cfg, x, yv, pen) == y, frac_str(vertical_switch(cfg, x, yv, pen)), frac_str(y)))
    if cfg.variant == QP6:
        a3, a4 = cfg.a[2], cfg.a[3]
        prod = y * vertical_switch(cfg, Fraction(0), y, pen)
        out.append(rep("qrt_qp6_vertical_at_x0_zero", prod == a3 * a4, frac_str(prod), frac_str(a3 * a4)))
    return out, pts
