"""Exact rational scalars, dense univariate polynomials and exact linear algebra.

Scalars are :class:`fractions.Fraction`. Matrices are plain row-major lists of
lists; every routine copies its input and returns fresh values.
"""
from __future__ import annotations

import sys
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

Scalar = Fraction
Number = Union[int, Fraction]
Matrix = List[List[Fraction]]


class Singular(ArithmeticError):
    """A linear system has no unique solution."""


def as_fraction(value: Union[Number, str]) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


def frac_str(value: Number) -> str:
    """Exact ``num/den`` string, also for integers beyond the default str() digit cap."""
    v = as_fraction(value)
    getter = getattr(sys, "get_int_max_str_digits", None)
    if getter is None:
        return f"{v.numerator}/{v.denominator}"
    old = getter()
    sys.set_int_max_str_digits(0)
    try:
        return f"{v.numerator}/{v.denominator}"
    finally:
        sys.set_int_max_str_digits(old)


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------


class Poly:
    """Dense univariate polynomial with Fraction coefficients, lowest degree first.

    The zero polynomial has an empty coefficient tuple and ``degree`` equal to
    ``Poly.NEG_INF``.
    """

    __slots__ = ("coeffs",)
    NEG_INF = float("-inf")

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: Tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def const(cls, c: Number) -> "Poly":
        return cls([c])

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def linear(cls, c0: Number, c1: Number) -> "Poly":
        """``c0 + c1*x``."""
        return cls([c0, c1])

    @classmethod
    def monomial(cls, k: int, c: Number = 1) -> "Poly":
        return cls([0] * k + [c])

    @classmethod
    def product(cls, factors: Iterable["Poly"]) -> "Poly":
        out = cls.const(1)
        for f in factors:
            out = out * f
        return out

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else Poly.NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __call__(self, x: Number) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __add__(self, other) -> "Poly":
        other = _lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        return self + (-_lift(other))

    def __rsub__(self, other) -> "Poly":
        return _lift(other) - self

    def __mul__(self, other) -> "Poly":
        other = _lift(other)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        out = Poly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def scale(self, c: Number) -> "Poly":
        return Poly(c * a for a in self.coeffs)

    def truncate(self, order: int) -> "Poly":
        """Keep coefficients of degree < order."""
        return Poly(self.coeffs[:order])

    def shift_down(self, k: int) -> "Poly":
        """Divide by x**k, requiring the low k coefficients to be zero."""
        if any(c != 0 for c in self.coeffs[:k]):
            raise ArithmeticError(f"polynomial not divisible by x^{k}")
        return Poly(self.coeffs[k:])


def _lift(p) -> Poly:
    if isinstance(p, Poly):
        return p
    return Poly.const(p)


def poly_divide(num: Poly, den: Poly) -> Tuple[Poly, Poly]:
    """Euclidean division: ``num = den*quo + rem`` with ``deg rem < deg den``."""
    if den.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(num.coeffs)
    dd = len(den.coeffs) - 1
    lead = den.coeffs[-1]
    if len(rem) - 1 < dd:
        return Poly(), Poly(rem)
    quo = [Fraction(0)] * (len(rem) - dd)
    for k in range(len(rem) - 1, dd - 1, -1):
        c = rem[k] / lead
        quo[k - dd] = c
        if c:
            for j, d in enumerate(den.coeffs):
                rem[k - dd + j] -= c * d
    return Poly(quo), Poly(rem[:dd])


def poly_exact_div(num: Poly, den: Poly) -> Poly:
    """Division that must leave no remainder."""
    quo, rem = poly_divide(num, den)
    if not rem.is_zero():
        raise ArithmeticError("inexact polynomial division")
    return quo


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by Euclid's algorithm; gcd(0, 0) = 0."""
    a, b = _lift(a), _lift(b)
    while not b.is_zero():
        a, b = b, poly_divide(a, b)[1]
    if a.is_zero():
        return a
    return a.scale(1 / a[a.degree])


def poly_scale_arg(p: Poly, s: Number) -> Poly:
    """The polynomial ``x -> p(s*x)``."""
    s = as_fraction(s)
    out = []
    power = Fraction(1)
    for c in p.coeffs:
        out.append(c * power)
        power *= s
    return Poly(out)


# ---------------------------------------------------------------------------
# Linear algebra
# ---------------------------------------------------------------------------


def to_matrix(rows: Sequence[Sequence[Number]]) -> Matrix:
    mat = [[as_fraction(v) for v in row] for row in rows]
    if mat and any(len(r) != len(mat[0]) for r in mat):
        raise ValueError("ragged matrix")
    return mat


def det_exact(rows: Sequence[Sequence[Number]]) -> Fraction:
    """Determinant by fraction-free Bareiss elimination.

    Rational entries are first brought to a common denominator so the
    elimination runs over the integers. The 0x0 determinant is 1.
    """
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    mat = to_matrix(rows)
    denom = 1
    for row in mat:
        for v in row:
            denom = denom * v.denominator // _gcd(denom, v.denominator)
    a = [[int(v * denom) for v in row] for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return Fraction(sign * a[n - 1][n - 1], denom**n)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def row_reduce(rows: Sequence[Sequence[Number]]) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form over Q; returns (rref, pivot columns)."""
    mat = to_matrix(rows)
    if not mat:
        return mat, []
    n_rows, n_cols = len(mat), len(mat[0])
    pivots: List[int] = []
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(n_rows):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return mat, pivots


def rank(rows: Sequence[Sequence[Number]]) -> int:
    return len(row_reduce(rows)[1])


def nullspace(rows: Sequence[Sequence[Number]], n_cols: int = None) -> List[List[Fraction]]:
    """Basis of the right nullspace, one vector per free column."""
    if not rows:
        if n_cols is None:
            return []
        return [[Fraction(int(i == j)) for i in range(n_cols)] for j in range(n_cols)]
    rref, pivots = row_reduce(rows)
    cols = len(rref[0])
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rref[r][fc]
        basis.append(v)
    return basis


def solve_linear(rows: Sequence[Sequence[Number]], rhs: Sequence[Number]) -> List[Fraction]:
    """Unique solution of a square system; raises Singular otherwise.

    Forward elimination is fraction-free on the integer-scaled augmented
    matrix; back substitution is plain rational arithmetic.
    """
    n = len(rows)
    if any(len(r) != n for r in rows) or len(rhs) != n:
        raise ValueError("solve_linear needs a square system")
    if n == 0:
        return []
    aug = to_matrix([list(r) + [b] for r, b in zip(rows, rhs)])
    a = []
    for row in aug:
        d = 1
        for v in row:
            d = d * v.denominator // _gcd(d, v.denominator)
        a.append([int(v * d) for v in row])
    prev = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            raise Singular("matrix is singular")
        a[k], a[piv] = a[piv], a[k]
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k, n + 1):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = Fraction(a[i][n]) - sum(a[i][j] * x[j] for j in range(i + 1, n))
        x[i] = s / a[i][i]
    return x


def mat_vec(rows: Sequence[Sequence[Number]], vec: Sequence[Number]) -> List[Fraction]:
    return [sum((as_fraction(a) * b for a, b in zip(row, vec)), Fraction(0)) for row in rows]
