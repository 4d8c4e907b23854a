"""Padé approximation at x = 0 and Padé interpolation on q-geometric nodes.

Both problems are solved twice: by exact linear algebra (normalised so that
``Q(0) = 1``) and by the Hankel-type determinant formulas, which only fix the
pair up to a common factor.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence

from .exact import (
    Number,
    Poly,
    Singular,
    as_fraction,
    det_exact,
    nullspace,
    poly_divide,
    poly_exact_div,
    poly_gcd,
)
from .qkernel import ParamSet, f_prime_node, qpoch, qpoch_list, y_nodes


class NormalizationFailure(ArithmeticError):
    """Every solution of the homogeneous problem has Q(0) = 0."""


class IdenticallyZero(ArithmeticError):
    """A determinant formula collapsed to the zero polynomial."""


@dataclass(frozen=True)
class PadePair:
    P: Poly
    Q: Poly

    def cross(self, other: "PadePair") -> Poly:
        """``P*Q' - P'*Q``; zero iff the pairs are proportional (Q nonzero)."""
        return self.P * other.Q - other.P * self.Q


def _solve_homogeneous(rows: List[List[Fraction]], m: int, n: int, strict: bool = False) -> PadePair:
    """Unique P/Q from the homogeneous conditions, normalised to Q(0) = 1.

    A non-normal (degenerate) system has a larger solution space but still a
    unique rational function; unless ``strict``, the pair is reduced by
    gcd(P, Q) and returned if it still satisfies every condition.
    """
    basis = nullspace(rows, m + n + 2)
    if len(basis) == 1:
        v = basis[0]
    elif len(basis) > 1 and not strict:
        v = _reduced(rows, basis, m)
    else:
        raise Singular(f"Padé system has a {len(basis)}-dimensional solution space")
    p_coeffs, q_coeffs = v[: m + 1], v[m + 1 :]
    if q_coeffs[0] == 0:
        raise NormalizationFailure("Q(0) = 0 for the unique solution")
    inv = 1 / q_coeffs[0]
    return PadePair(Poly(c * inv for c in p_coeffs), Poly(c * inv for c in q_coeffs))


def _reduced(rows: List[List[Fraction]], basis: List[List[Fraction]], m: int) -> List[Fraction]:
    for v in basis:
        P, Q = Poly(v[: m + 1]), Poly(v[m + 1 :])
        if Q.is_zero():
            continue
        h = poly_gcd(P, Q) if not P.is_zero() else Poly([1])
        P0, Q0 = poly_exact_div(P, h), poly_exact_div(Q, h)
        w = [P0[i] for i in range(m + 1)] + [Q0[j] for j in range(len(v) - m - 1)]
        if Q0[0] != 0 and all(sum(r * x for r, x in zip(row, w)) == 0 for row in rows):
            return w
    raise Singular(f"Padé system has a {len(basis)}-dimensional solution space with no reduced solution")


def pade_approx_series(series: Sequence[Number], m: int, n: int, strict: bool = False) -> PadePair:
    """P/Q with ``series*Q - P = O(x^(N+1))`` and Q(0) = 1.

    ``strict`` rejects non-normal systems instead of reducing them.
    """
    N = m + n
    c = [as_fraction(v) for v in series]
    if len(c) < N + 1:
        raise ValueError("need at least N+1 series coefficients")
    rows = []
    for k in range(N + 1):
        row = [Fraction(-1) if i == k else Fraction(0) for i in range(m + 1)]
        row += [c[k - j] if k - j >= 0 else Fraction(0) for j in range(n + 1)]
        rows.append(row)
    return _solve_homogeneous(rows, m, n, strict)


def pade_interpolate(nodes: Sequence[Number], values: Sequence[Number], m: int, n: int, strict: bool = False) -> PadePair:
    """P/Q with ``P(x_i) = y_i Q(x_i)`` at all N+1 nodes and Q(0) = 1."""
    N = m + n
    xs = [as_fraction(v) for v in nodes]
    ys = [as_fraction(v) for v in values]
    if len(xs) != N + 1 or len(ys) != N + 1:
        raise ValueError("need exactly N+1 nodes and values")
    if len(set(xs)) != len(xs):
        raise ValueError("nodes must be distinct")
    rows = []
    for x, y in zip(xs, ys):
        rows.append([x**i for i in range(m + 1)] + [-y * x**j for j in range(n + 1)])
    return _solve_homogeneous(rows, m, n, strict)


def node_polynomial(nodes: Sequence[Number]) -> Poly:
    """``F(x) = prod (x - x_i)``."""
    return Poly.product(Poly.linear(-as_fraction(x), 1) for x in nodes)


def _det_poly(entries, size: int, degree_bound: int) -> Poly:
    """Determinant of a polynomial matrix, by evaluation and interpolation."""
    if size == 0:
        return Poly.const(1)
    pts = [Fraction(k + 1, 1) for k in range(degree_bound + 1)]
    vals = []
    for t in pts:
        vals.append(det_exact([[entries(i, j)(t) for j in range(size)] for i in range(size)]))
    return lagrange(pts, vals)


def lagrange(xs: Sequence[Fraction], ys: Sequence[Fraction]) -> Poly:
    """Interpolating polynomial of degree < len(xs), by the Lagrange formula."""
    out = Poly()
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if yi == 0:
            continue
        basis = Poly.const(1)
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * Poly.linear(-xj, 1)
                denom *= xi - xj
        out = out + basis.scale(yi / denom)
    return out


def _weights_general(xs: List[Fraction], ys: List[Fraction]) -> List[Fraction]:
    out = []
    for s, xs_ in enumerate(xs):
        fp = Fraction(1)
        for i, xi in enumerate(xs):
            if i != s:
                fp *= xs_ - xi
        out.append(ys[s] / fp)
    return out


def _det_pair(xs: List[Fraction], w: List[Fraction], m: int, n: int, power_shift: int) -> PadePair:
    """Shared body of the general and specialised determinant formulas.

    Entry (i, j) of the P-matrix is ``sum_s w_s x_s^(i+j+shift) / (x - x_s)``,
    multiplied by F(x); the Q-matrix uses ``(x - x_s)`` instead.
    """
    N = m + n
    F = node_polynomial(xs)
    # F(x)/(x - x_s) as exact polynomials
    cofactors = [poly_exact_div(F, Poly.linear(-x, 1)) for x in xs]

    def p_entry(i, j):
        return sum(
            (c.scale(ws * xs_ ** (i + j + power_shift)) for c, ws, xs_ in zip(cofactors, w, xs)),
            Poly(),
        )

    def q_entry(i, j):
        return sum(
            (Poly.linear(-xs_, 1).scale(ws * xs_ ** (i + j + power_shift)) for ws, xs_ in zip(w, xs)),
            Poly(),
        )

    # F * det(M) = det(F*M) / F^n
    P = _det_poly(p_entry, n + 1, N * (n + 1))
    for _ in range(n):
        P, rem = poly_divide(P, F)
        if not rem.is_zero():
            raise ArithmeticError("determinant numerator not divisible by F^n")
    Q = _det_poly(q_entry, n, n)
    if P.is_zero() and Q.is_zero():
        raise IdenticallyZero("determinant formulas collapsed")
    return PadePair(P, Q)


def pade_det_interpolation(nodes: Sequence[Number], values: Sequence[Number], m: int, n: int) -> PadePair:
    """Determinant solution with weights ``u_s = y_s / F'(x_s)``; P = F*R, Q = W."""
    xs = [as_fraction(v) for v in nodes]
    ys = [as_fraction(v) for v in values]
    if len(xs) != m + n + 1 or len(ys) != len(xs):
        raise ValueError("need exactly N+1 nodes and values")
    if len(set(xs)) != len(xs):
        raise ValueError("nodes must be distinct")
    return _det_pair(xs, _weights_general(xs, ys), m, n, 0)


def specialized_weight(p: ParamSet, s: int) -> Fraction:
    """``(a3, a4, q^-N)_s / (a1, a2, q)_s``."""
    q = p.q
    num = qpoch_list((p.a3, p.a4, q ** (-p.N)), s, q)
    den = qpoch_list((p.a1, p.a2, q), s, q)
    return num / den


def entry_prefactor(p: ParamSet) -> Fraction:
    """``(q^(N+1))_inf / (q)_inf`` as the finite product ``1/(q)_N``."""
    return 1 / qpoch(p.q, p.N, p.q)


def pade_det_specialized(p: ParamSet) -> PadePair:
    """Determinant solution on nodes q^s with the closed-form weights.

    Entries are ``k * sum_s w_s q^(s(i+j+1)) / (x - q^s)`` with the uniform
    factor ``k = (q^(N+1))_inf / (q)_inf`` taken in its finite form ``1/(q)_N``.
    It scales P and Q by different powers of k, so it cannot be dropped.
    """
    q = p.q
    xs = [q**s for s in range(p.N + 1)]
    k = entry_prefactor(p)
    w = [k * specialized_weight(p, s) for s in range(p.N + 1)]
    return _det_pair(xs, w, p.m, p.n, 1)


def solve_e6(p: ParamSet) -> PadePair:
    """Normalised interpolation solution for the E6 data y_i at nodes q^i.

    Non-normal data is rejected: the Lax construction needs the full-degree pair.
    """
    return pade_interpolate([p.q**i for i in range(p.N + 1)], y_nodes(p), p.m, p.n, strict=True)


def general_weights(nodes: Sequence[Number], values: Sequence[Number]) -> List[Fraction]:
    return _weights_general([as_fraction(v) for v in nodes], [as_fraction(v) for v in values])


__all__ = [
    "PadePair",
    "NormalizationFailure",
    "IdenticallyZero",
    "pade_approx_series",
    "pade_interpolate",
    "pade_det_interpolation",
    "pade_det_specialized",
    "specialized_weight",
    "solve_e6",
    "node_polynomial",
    "lagrange",
    "f_prime_node",
]
