"""Lax-pair data (f, g, c0, c, c') from the Padé solutions at p and at a shifted p.

Every Y-dependence is removed with the finite ratios Y(qx)/Y(x) and
Ybar(x)/Y(x), so each coefficient of the 3x3 Casorati determinants becomes a
polynomial that can be factored exactly.

Write the second-order relation as ``alpha(x) y(x) - beta(x) y(qx) +
c1 x^e (1 - f x) ybar(x) = 0`` (e = 0 for D5, e = 1 for E6) and the third
as ``c2 x^e (1 - fbar x/q) U0(x) y(x) + V0(x) ybar(x) - W0(x) ybar(x/q) = 0``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, FrozenSet, Optional, Tuple

from .exact import Poly, poly_divide, poly_scale_arg
from .pade import PadePair, pade_approx_series, solve_e6
from .qkernel import Inadmissible, ParamSet, taylor_Y_d5, y_at_power


class DivisibilityFailure(ArithmeticError):
    """A factor forced by the construction left a nonzero remainder."""


class DegenerateLax(ArithmeticError):
    """f or g sits at infinity (or zero) for this parameter set."""


class DegenerateF(DegenerateLax):
    pass


class DegenerateG(DegenerateLax):
    pass


def lin(t) -> Poly:
    """``(t x)_1 = 1 - t x``."""
    return Poly.linear(1, -Fraction(t))


def lins(*ts) -> Poly:
    return Poly.product(lin(t) for t in ts)


@dataclass(frozen=True)
class Direction:
    """A deformation: shifts of (m, n) and the set of a_i multiplied by q."""

    tag: str
    dm: int
    dn: int
    shifted: FrozenSet[int]
    d5: bool = False

    def apply(self, p: ParamSet, power: int = 1) -> ParamSet:
        scale = p.q**power
        kw = {f"a{i}": getattr(p, f"a{i}") * scale for i in self.shifted}
        m, n = p.m + power * self.dm, p.n + power * self.dn
        if m < 0 or n < 0:
            raise Inadmissible(f"direction {self.tag} leaves m, n >= 0")
        return p.with_(m=m, n=n, **kw)

    def inverse(self, p: ParamSet) -> ParamSet:
        return self.apply(p, -1)

    def ybar_ratio(self, p: ParamSet) -> Tuple[Poly, Poly]:
        """Ybar(x)/Y(x) as (numerator, denominator) polynomials."""
        num, den = Poly.const(1), Poly.const(1)
        for i in sorted(self.shifted):
            a = getattr(p, f"a{i}")
            if i in (1, 2):
                den = den * lin(a)
                if not self.d5:
                    num = num * (1 - a)
            else:
                num = num * lin(a)
                if not self.d5:
                    den = den * (1 - a)
        return num, den


D5_T = Direction("D5_T", 0, 0, frozenset({2, 4}), d5=True)
E6_T = Direction("E6_T", -1, 0, frozenset({2}))
E6_T1 = Direction("E6_T1", 0, 0, frozenset({1, 2, 3, 4}))
E6_T2 = Direction("E6_T2", 0, -1, frozenset({4}))
E6_T3 = Direction("E6_T3", -1, 0, frozenset({1, 2, 3}))
E6_T4 = Direction("E6_T4", 0, 0, frozenset({1, 4}))

E6_DIRECTIONS = (E6_T, E6_T1, E6_T2, E6_T3, E6_T4)
DIRECTIONS: Dict[str, Direction] = {d.tag: d for d in (D5_T,) + E6_DIRECTIONS}


@dataclass(frozen=True)
class Template:
    """Known factors of the displayed coefficients for one direction.

    ``alpha``/``beta`` are the y(x)/y(qx) coefficients of the L2 relation
    without the g-factor; ``g_slot`` says where (1 - x/g) sits ("alpha",
    "beta", or "scalar" for the D5 form g*alpha). ``V0``/``W0``/``U0`` are the
    L3 coefficients with g and f-bar supplied at call time.
    """

    alpha: Callable[[ParamSet], Poly]
    beta: Callable[[ParamSet], Poly]
    g_slot: str
    U0: Callable[[ParamSet], Poly]
    V0: Callable[[ParamSet, Fraction], Poly]
    W0: Callable[[ParamSet, Fraction], Poly]


def _one(p):
    return Poly.const(1)


TEMPLATES: Dict[str, Template] = {
    "D5_T": Template(
        alpha=lambda p: lin(p.a4),
        beta=lambda p: lin(p.a1),
        g_slot="scalar",
        U0=_one,
        V0=lambda p, g: lin(p.a2).scale(g),
        W0=lambda p, g: lin(p.a3 / p.q).scale(p.q ** (p.N + 1)),
    ),
    "E6_T": Template(
        alpha=_one,
        beta=lambda p: lin(p.a1),
        g_slot="alpha",
        U0=_one,
        V0=lambda p, g: lins(p.a2, p.q ** (-p.N), 1 / (p.q * g)),
        W0=lambda p, g: lins(p.a3 / p.q, p.a4 / p.q, 1),
    ),
    "E6_T1": Template(
        alpha=lambda p: lins(p.a3, p.a4),
        beta=lambda p: lin(p.q ** (-p.N)),
        g_slot="beta",
        U0=_one,
        V0=lambda p, g: lins(p.a1, p.a2),
        W0=lambda p, g: lins(1, 1 / g),
    ),
    "E6_T2": Template(
        alpha=lambda p: lin(p.a4),
        beta=lambda p: lins(p.a1, p.a2),
        g_slot="alpha",
        U0=_one,
        V0=lambda p, g: lins(p.q ** (-p.N), 1 / (p.q * g)),
        W0=lambda p, g: lins(p.a3 / p.q, 1),
    ),
    # L3 as forced by the Casorati determinant; the naive T3 form is not
    # compatible with its own L2 relation.
    "E6_T3": Template(
        alpha=lambda p: lin(p.a3),
        beta=_one,
        g_slot="beta",
        U0=_one,
        V0=lambda p, g: lins(p.a1, p.a2, p.q ** (-p.N)),
        W0=lambda p, g: lins(p.a4 / p.q, 1, 1 / g),
    ),
    "E6_T4": Template(
        alpha=lambda p: lin(p.a4),
        beta=lambda p: lins(p.a2, p.q ** (-p.N)),
        g_slot="alpha",
        U0=_one,
        V0=lambda p, g: lins(p.a1, 1 / (p.q * g)),
        W0=lambda p, g: lins(p.a3 / p.q, 1),
    ),
}


@dataclass
class LaxData:
    """Constants of the normalised L2/L3 pair at one parameter point.

    ``fbar`` and ``c0bar`` come from the cleared A-polynomial of the shifted
    problem; ``kappa`` is the constant part of Ybar/Y.
    """

    f: Fraction
    g: Fraction
    c0: Fraction
    c: Fraction
    cprime: Fraction
    fbar: Fraction
    c0bar: Fraction
    kappa: Fraction
    direction: str = ""
    q: Fraction = Fraction(1)

    @property
    def c1(self) -> Fraction:
        return self.c0 / self.c

    @property
    def c2(self) -> Fraction:
        if self.direction == D5_T.tag:
            return self.c0bar / self.c
        # the E6 y(x)-coefficient is -Abar(x/q), which brings x/q in front
        return self.c0bar * self.kappa / (self.q * self.c)


def solve_pair(p: ParamSet, d5: bool) -> PadePair:
    if d5:
        return pade_approx_series(taylor_Y_d5(p, p.N), p.m, p.n, strict=True)
    return solve_e6(p)


def forced_factor(p: ParamSet, d5: bool) -> Poly:
    """Zeros every cleared coefficient inherits from the approximation conditions."""
    if d5:
        return Poly.monomial(p.N + 1)
    return lins(*(p.q ** (-i) for i in range(p.N)))


def _exact(num: Poly, den: Poly, what: str) -> Poly:
    quo, rem = poly_divide(num, den)
    if not rem.is_zero():
        raise DivisibilityFailure(f"{what}: nonzero remainder {rem!r}")
    return quo


def _constant(poly: Poly, what: str) -> Fraction:
    if poly.degree not in (0, Poly.NEG_INF):
        raise DivisibilityFailure(f"{what} is not constant: {poly!r}")
    return poly[0]


def cleared_A(p: ParamSet, pair: PadePair) -> Poly:
    """``(a3 x, a4 x)_1 P(x) Q(qx) - (a1 x, a2 x)_1 P(qx) Q(x)``."""
    q = p.q
    P, Q = pair.P, pair.Q
    return lins(p.a3, p.a4) * P * poly_scale_arg(Q, q) - lins(p.a1, p.a2) * poly_scale_arg(P, q) * Q


def cleared_BC(p: ParamSet, d: Direction, pair: PadePair, bar: PadePair) -> Tuple[Poly, Poly]:
    """Cleared y(qx)- and y(x)-coefficients, each times den(Ybar/Y).

    ``KB = num P Qbar - den Pbar Q`` and
    ``KC = num (a1x,a2x)_1 P(qx) Qbar - den (a3x,a4x)_1 Pbar Q(qx)``; the
    y(x)-cofactor carries Qbar(x), not Q(x).
    """
    q = p.q
    num, den = d.ybar_ratio(p)
    P, Q = pair.P, pair.Q
    KB = num * P * bar.Q - den * bar.P * Q
    KC = num * lins(p.a1, p.a2) * poly_scale_arg(P, q) * bar.Q - den * lins(p.a3, p.a4) * bar.P * poly_scale_arg(Q, q)
    return KB, KC


def extract_f(p: ParamSet, pair: PadePair, d5: bool) -> Tuple[Fraction, Fraction]:
    """(c0, f) from ``K_A = c0 x^e H(x) (1 - f x)``; f does not depend on the direction."""
    KA = cleared_A(p, pair)
    rest = _exact(KA, forced_factor(p, d5), "K_A / forced zeros")
    if not d5:
        rest = _exact(rest, Poly.x(), "K_A / x")
    if rest.degree > 1:
        raise DivisibilityFailure("K_A leftover factor has degree > 1")
    c0 = rest[0]
    if c0 == 0:
        raise DegenerateF("c0 = 0")
    f = -rest[1] / c0
    if f == 0:
        raise DegenerateF("f = 0 (f-factor is constant)")
    return c0, f


def lax_coefficients(p: ParamSet, d: Direction, pair: PadePair, bar: PadePair) -> Tuple[Poly, Poly]:
    """``(c' alpha, c beta)`` of the normalised L2 relation, as exact polynomials."""
    KB, KC = cleared_BC(p, d, pair, bar)
    _, den = d.ybar_ratio(p)
    H = forced_factor(p, d.d5)
    alpha_c = _exact(KC, den * H, "K_C / (den * forced zeros)")
    beta_c = _exact(lins(p.a1, p.a2) * KB, den * H, "(a1x,a2x)_1 K_B / (den * forced zeros)")
    return alpha_c, beta_c


def extract_g(p: ParamSet, d: Direction, pair: PadePair, bar: PadePair) -> Tuple[Fraction, Fraction, Fraction]:
    """(c, c', g) read off the L2 coefficients with the direction's template."""
    alpha_c, beta_c = lax_coefficients(p, d, pair, bar)
    t = TEMPLATES[d.tag]
    if t.g_slot == "scalar":
        c = _constant(_exact(beta_c, t.beta(p), "beta / template"), "c")
        cprime = _constant(_exact(alpha_c, t.alpha(p), "alpha / template"), "c'")
        if c == 0 or cprime == 0:
            raise DegenerateG("c or c' vanishes")
        return c, cprime, cprime / c
    c, cprime = beta_c[0], alpha_c[0]
    if c == 0:
        raise DegenerateG("c = 0")
    if t.g_slot == "alpha":
        fixed, carrier = (beta_c, t.beta(p)), (alpha_c, t.alpha(p))
    else:
        fixed, carrier = (alpha_c, t.alpha(p)), (beta_c, t.beta(p))
    _constant(_exact(*fixed, "template coefficient"), "template coefficient")
    leftover = _exact(*carrier, "g-carrying coefficient / template")
    if leftover.degree != 1:
        raise DegenerateG(f"g-factor has degree {leftover.degree}")
    g = -leftover[0] / leftover[1]
    return c, cprime, g


def extract(
    p: ParamSet,
    d: Direction,
    pair: Optional[PadePair] = None,
    bar: Optional[PadePair] = None,
) -> LaxData:
    """Full Lax data at p along d; solves the Padé problems at p and d(p) if not given."""
    pair = pair or solve_pair(p, d.d5)
    pb = d.apply(p)
    bar = bar or solve_pair(pb, d.d5)
    c0, f = extract_f(p, pair, d.d5)
    c0bar, fbar = extract_f(pb, bar, d.d5)
    c, cprime, g = extract_g(p, d, pair, bar)
    if g == 0:
        raise DegenerateG("g = 0")
    num, den = d.ybar_ratio(p)
    return LaxData(
        f=f,
        g=g,
        c0=c0,
        c=c,
        cprime=cprime,
        fbar=fbar,
        c0bar=c0bar,
        kappa=num[0] / den[0],
        direction=d.tag,
        q=p.q,
    )


def extract_d5(p: ParamSet) -> LaxData:
    return extract(p, D5_T)


def extract_e6(p: ParamSet, d: Direction = None) -> LaxData:
    return extract(p, d or E6_T)


def l3_cofactors(p: ParamSet, d: Direction, pair: PadePair, bar: PadePair) -> Tuple[Poly, Poly, Poly]:
    """Coefficients (U, V, W) of y(x), ybar(x), ybar(x/q) in L3, divided by Y(x)
    and multiplied by the common denominator of Ybar/Y and Ybar(x/q)/Y(x)."""
    q = p.q
    iq = 1 / q
    nb, db = d.ybar_ratio(p)
    n2 = poly_scale_arg(nb, iq) * lins(p.a1 / q, p.a2 / q)
    d2 = poly_scale_arg(db, iq) * lins(p.a3 / q, p.a4 / q)
    P, Q, Pb, Qb = pair.P, pair.Q, bar.P, bar.Q
    Pb_ = poly_scale_arg(Pb, iq)
    Qb_ = poly_scale_arg(Qb, iq)
    U = Pb * n2 * db * Qb_ - Pb_ * nb * d2 * Qb
    V = Pb_ * Q * db * d2 - P * n2 * db * Qb_
    W = P * nb * d2 * Qb - Pb * Q * db * d2
    return U, V, W


def l2_display(p: ParamSet, d: Direction, L: LaxData) -> Tuple[Poly, Poly, Poly]:
    """(alpha, beta, gamma) with ``alpha y(x) - beta y(qx) + gamma ybar(x) = 0``."""
    t = TEMPLATES[d.tag]
    alpha, beta = t.alpha(p), t.beta(p)
    if t.g_slot == "scalar":
        alpha = alpha.scale(L.g)
    elif t.g_slot == "alpha":
        alpha = alpha * lin(1 / L.g)
    else:
        beta = beta * lin(1 / L.g)
    gamma = lin(L.f).scale(L.c1)
    if not d.d5:
        gamma = gamma * Poly.x()
    return alpha, beta, gamma


def l3_display(p: ParamSet, d: Direction, L: LaxData) -> Tuple[Poly, Poly, Poly]:
    """(u, v, w) with ``u y(x) + v ybar(x) - w ybar(x/q) = 0``."""
    t = TEMPLATES[d.tag]
    u = lin(L.fbar / p.q).scale(L.c2) * t.U0(p)
    if not d.d5:
        u = u * Poly.x()
    return u, t.V0(p, L.g), t.W0(p, L.g)


@dataclass
class LaxReport:
    checks: Dict[str, bool]
    witness: Dict[str, str]

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def _yq_e6(p: ParamSet, pair: PadePair, k: int) -> Fraction:
    x = p.q**k
    return y_at_power(p, k) * pair.Q(x)


def lax_residual_check(
    p: ParamSet,
    d: Direction,
    L: Optional[LaxData] = None,
    pair: Optional[PadePair] = None,
    bar: Optional[PadePair] = None,
) -> LaxReport:
    """Substitute both basis solutions (P and Y*Q) into the displayed L2 and L3.

    With y = P the relations must hold as polynomial identities. With
    y = Y*Q they are checked at x = q^k, k = -1..N+2 (E6), or as power
    series through order N+3 (D5).
    """
    q = p.q
    pair = pair or solve_pair(p, d.d5)
    pb = d.apply(p)
    bar = bar or solve_pair(pb, d.d5)
    L = L or extract(p, d, pair, bar)
    alpha, beta, gamma = l2_display(p, d, L)
    u, v, w = l3_display(p, d, L)
    P, Pb = pair.P, bar.P
    checks: Dict[str, bool] = {}
    witness: Dict[str, str] = {}

    r2 = alpha * P - beta * poly_scale_arg(P, q) + gamma * Pb
    r3 = u * P + v * Pb - w * poly_scale_arg(Pb, 1 / q)
    checks["L2_P"] = r2.is_zero()
    checks["L3_P"] = r3.is_zero()
    witness["L2_P_residual"] = repr(r2)
    witness["L3_P_residual"] = repr(r3)

    if d.d5:
        order = p.N + 4
        Ys = Poly(taylor_Y_d5(p, order))
        Ybs = Poly(taylor_Y_d5(pb, order))
        y = (Ys * pair.Q).truncate(order)
        yb = (Ybs * bar.Q).truncate(order)
        s2 = (alpha * y - beta * poly_scale_arg(y, q) + gamma * yb).truncate(order)
        s3 = (u * y + v * yb - w * poly_scale_arg(yb, 1 / q)).truncate(order)
        checks["L2_YQ_series"] = s2.is_zero()
        checks["L3_YQ_series"] = s3.is_zero()
        witness["series_order"] = str(order - 1)
    else:
        bad2, bad3, used = [], [], []
        for k in range(-1, p.N + 3):
            x = q**k
            try:
                y0, y1 = _yq_e6(p, pair, k), _yq_e6(p, pair, k + 1)
                yb0, ybm = _yq_e6(pb, bar, k), _yq_e6(pb, bar, k - 1)
            except Inadmissible:
                continue
            used.append(k)
            if alpha(x) * y0 - beta(x) * y1 + gamma(x) * yb0 != 0:
                bad2.append(k)
            if u(x) * y0 + v(x) * yb0 - w(x) * ybm != 0:
                bad3.append(k)
        checks["L2_YQ_nodes"] = not bad2 and bool(used)
        checks["L3_YQ_nodes"] = not bad3 and bool(used)
        witness["node_powers"] = ",".join(map(str, used))
        checks["c_equals_cprime"] = L.c == L.cprime
    return LaxReport(checks, witness)
