from __future__ import annotations

from fractions import Fraction

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from qpade.exact import Poly
from qpade.pade import (
    lagrange,
    node_polynomial,
    pade_approx_series,
    pade_det_interpolation,
    pade_det_specialized,
    pade_interpolate,
    solve_e6,
    specialized_weight,
)
from qpade.qkernel import f_prime_node, qpoch, y_nodes
from conftest import params_for, rationals


def lagrange_oracle(xs, ys, t):
    total = Fraction(0)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        term = yi
        for j, xj in enumerate(xs):
            if j != i:
                term *= (t - xj) / (xi - xj)
        total += term
    return total


class TestSeriesPade:
    def test_constant_series(self):
        for m in range(3):
            for n in range(3):
                pair = pade_approx_series([1] + [0] * (m + n), m, n)
                assert pair.P == Poly([1]) and pair.Q == Poly([1])

    def test_truncation(self):
        pair = pade_approx_series([3, 5], 1, 0)
        assert pair.P == Poly([3, 5]) and pair.Q == Poly([1])

    def test_hand_solution_m1_n1(self):
        c1, c2 = Fraction(2, 3), Fraction(5, 7)
        pair = pade_approx_series([1, c1, c2], 1, 1)
        assert pair.Q == Poly([1, -c2 / c1])
        assert pair.P == Poly([1, c1 - c2 / c1])

    def test_recovers_rational_function(self):
        # 1/(1-x) = 1 + x + x^2 + ...
        pair = pade_approx_series([1] * 5, 2, 2)
        assert pair.P * Poly([1, -1]) == pair.Q

    @given(st.integers(0, 3), st.integers(0, 3), st.data())
    @settings(max_examples=40, deadline=None)
    def test_order_condition(self, m, n, data):
        N = m + n
        c = [Fraction(1)] + data.draw(st.lists(rationals(7), min_size=N, max_size=N))
        try:
            pair = pade_approx_series(c, m, n)
        except ArithmeticError:
            return
        prod = Poly(c) * pair.Q - pair.P
        assert all(prod[k] == 0 for k in range(N + 1))
        assert pair.Q[0] == 1


class TestInterpolation:
    def test_constant_values(self):
        pair = pade_interpolate([1, 2, 3], [4, 4, 4], 0, 2)
        assert pair.P(7) / pair.Q(7) == 4

    def test_constant_m0(self):
        pair = pade_interpolate([2], [Fraction(5, 3)], 0, 0)
        assert pair.P == Poly([Fraction(5, 3)]) and pair.Q == Poly([1])

    @given(st.lists(rationals(9), min_size=1, max_size=5, unique=True), st.data())
    @settings(max_examples=40, deadline=None)
    def test_n0_is_lagrange(self, xs, data):
        ys = data.draw(st.lists(rationals(9), min_size=len(xs), max_size=len(xs)))
        pair = pade_interpolate(xs, ys, len(xs) - 1, 0)
        t = Fraction(13, 17)
        assert pair.Q == Poly([1])
        assert pair.P(t) == lagrange_oracle(xs, ys, t)
        assert lagrange(xs, ys)(t) == lagrange_oracle(xs, ys, t)

    def test_e6_data_matches_at_nodes(self):
        for m, n in [(1, 1), (2, 1), (2, 2)]:
            p = params_for(1, m, n)
            pair = solve_e6(p)
            for i, y in enumerate(y_nodes(p)):
                x = p.q**i
                assert pair.P(x) == y * pair.Q(x)


class TestDeterminantRoute:
    @given(st.integers(0, 3), st.integers(0, 3), st.data())
    @settings(max_examples=30, deadline=None)
    def test_proportional_to_solver(self, m, n, data):
        N = m + n
        xs = data.draw(st.lists(rationals(9), min_size=N + 1, max_size=N + 1, unique=True))
        ys = data.draw(st.lists(rationals(9, True), min_size=N + 1, max_size=N + 1))
        try:
            solved = pade_interpolate(xs, ys, m, n)
            det = pade_det_interpolation(xs, ys, m, n)
        except ArithmeticError:
            assume(False)
        assert det.cross(solved).is_zero()

    @given(st.integers(0, 5), st.data())
    @settings(max_examples=30, deadline=None)
    def test_nodal_identity(self, N, data):
        xs = data.draw(st.lists(rationals(9), min_size=N + 1, max_size=N + 1, unique=True))
        ys = data.draw(st.lists(rationals(9, True), min_size=N + 1, max_size=N + 1))
        m = data.draw(st.integers(0, N))
        try:
            det = pade_det_interpolation(xs, ys, m, N - m)
        except ArithmeticError:
            assume(False)
        for x, y in zip(xs, ys):
            assume(det.Q(x) != 0)
            assert det.P(x) == y * det.Q(x)

    def test_n0_gives_lagrange(self):
        xs = [Fraction(1), Fraction(2, 3), Fraction(-1, 2)]
        ys = [Fraction(3), Fraction(1, 5), Fraction(4)]
        det = pade_det_interpolation(xs, ys, 2, 0)
        assert det.Q.degree == 0
        t = Fraction(7, 3)
        assert det.P(t) / det.Q(t) == lagrange_oracle(xs, ys, t)

    def test_node_polynomial(self):
        xs = [Fraction(1), Fraction(1, 2), Fraction(1, 4)]
        F = node_polynomial(xs)
        assert all(F(x) == 0 for x in xs) and F.degree == 3

    def test_specialized_matches_solver(self):
        for m in range(3):
            for n in range(3):
                p = params_for(2, m, n)
                assert pade_det_specialized(p).cross(solve_e6(p)).is_zero()

    def test_specialized_weight_terminates(self):
        p = params_for(3, 1, 1)
        assert specialized_weight(p, 0) == 1
        # the q^-N factor vanishes one step past the last node
        assert specialized_weight(p, p.N + 1) == 0

    def test_specialized_weight_is_closed_form(self):
        # w_s = (y_s / F'(x_s)) * (q)_N * q^-s, the last factor absorbed by the node powers
        for m, n in [(1, 1), (2, 1), (0, 2)]:
            p = params_for(4, m, n)
            q, ys = p.q, y_nodes(p)
            for s in range(p.N + 1):
                direct = ys[s] / f_prime_node(s, p.N, q)
                assert specialized_weight(p, s) == direct * qpoch(q, p.N, q) * q ** (-s)

    def test_n0_specialized(self):
        p = params_for(5, 0, 0)
        det = pade_det_specialized(p)
        assert det.P.degree == 0 and det.Q.degree == 0
