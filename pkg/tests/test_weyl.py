from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from qpade.verify import direction_data
from qpade.weyl import (
    GAUGE,
    GENERATORS,
    R_PRIME_WORD,
    R_WORD,
    T_WORD,
    IndeterminatePoint,
    WeylState,
    apply,
    apply_word,
    cartan,
    check_relations,
    check_translation,
    direction_g,
    direction_residuals,
    invert_word,
    relation_table,
    scaling,
    scaling_commutes,
    shifted_b,
    translation_T,
    verify_weyl_painleve,
    weyl_direction_words,
    weyl_residuals,
    weyl_vs_pade,
)
from conftest import params_for, rationals


def states():
    nz = rationals(9, True)
    return st.builds(lambda b, f, g: WeylState(tuple(b), f, g), st.lists(nz, min_size=8, max_size=8), nz, nz)


def safe(fn, *args):
    try:
        return fn(*args)
    except IndeterminatePoint:
        assume(False)


class TestGenerators:
    def test_s1_swaps(self):
        s = WeylState(tuple(range(1, 9)), 2, 3)
        t = apply("s1", s)
        assert t.b == (2, 1, 3, 4, 5, 6, 7, 8) and (t.f, t.g) == (2, 3)

    def test_pi1_formula(self):
        s = WeylState(tuple(Fraction(k, 3) for k in range(1, 9)), Fraction(5, 2), Fraction(-1, 7))
        b = s.b
        t = apply("pi1", s)
        assert t.b == (1 / b[3], 1 / b[2], 1 / b[1], 1 / b[0], 1 / b[4], 1 / b[5], 1 / b[6], 1 / b[7])
        assert (t.f, t.g) == (s.g, s.f)

    @given(states(), st.sampled_from(sorted(GENERATORS)))
    @settings(max_examples=80, deadline=None)
    def test_involutions(self, s, gen):
        assert safe(apply_word, [gen, gen], s) == s

    @given(states(), st.sampled_from(sorted(GENERATORS)))
    @settings(max_examples=60, deadline=None)
    def test_q_preserved_or_inverted(self, s, gen):
        expected = 1 / s.q if gen.startswith("pi") else s.q
        assert safe(apply, gen, s).q == expected

    def test_indeterminate(self):
        # denominator of s2: 1 - b2 f - f g + b2 b8 f g with f = 1, b2 = 1 -> -g + b8 g; b8 = 1 kills it
        s = WeylState((1, 1, 1, 1, 1, 1, 1, 1), 1, 2)
        with pytest.raises(IndeterminatePoint):
            apply("s2", s)


class TestWords:
    def test_empty_and_inverse(self):
        s = WeylState(tuple(range(1, 9)), 2, 3)
        assert apply_word([], s) == s
        assert invert_word(["pi2", "s0", "s5"]) == ["s5", "s0", "pi2"]

    @given(states())
    @settings(max_examples=20, deadline=None)
    def test_word_times_inverse(self, s):
        assert safe(lambda: apply_word(invert_word(R_WORD), apply_word(R_WORD, s))) == s

    def test_word_lengths(self):
        assert len(R_PRIME_WORD) == len(R_WORD) + 2
        assert T_WORD == R_PRIME_WORD + R_WORD


class TestCartan:
    def test_shape(self):
        A = cartan()
        assert all(A[i][i] == 2 for i in range(7))
        assert A[0][6] == A[6][0] == -1
        assert [sum(r) for r in A] == [1, 1, 0, -1, 0, 1, 0]
        assert all(A[i][j] == A[j][i] for i in range(7) for j in range(7))

    def test_table_covers_every_pair(self):
        names = {name for name, _, _ in relation_table()}
        assert "(s2s3)^3" in names and "(s0s1)^2" in names and "s2pi1=pi1s6" in names
        conj = [n for n in names if "pi" in n and "=" in n]
        assert len(conj) == 10


class TestRelations:
    def test_all_relations(self):
        reports = check_relations(5, 1)
        assert len(reports) == 5 * len(relation_table())
        assert all(r.status == "pass" for r in reports)

    def test_gauged_relations_are_not_strict(self):
        rng = random.Random(9)
        s = WeylState(tuple(Fraction(rng.randint(2, 9), rng.randint(2, 9)) for _ in range(8)), Fraction(2, 3), Fraction(5, 7))
        lhs = apply_word(["pi1", "pi2"] * 3, s)
        assert lhs != s
        assert lhs == scaling(s, GAUGE["(pi1pi2)^3"](s))
        assert apply_word(["s6", "pi2"], s) == scaling(apply_word(["pi2", "s6"], s), GAUGE["s6pi2=pi2s6"](s))

    def test_named_examples(self):
        s = WeylState(tuple(Fraction(k + 2, 3) for k in range(8)), Fraction(4, 9), Fraction(-5, 2))
        assert apply_word(["s2", "s3"] * 3, s) == s
        assert apply_word(["s0", "s1"] * 2, s) == s
        assert apply_word(["s2", "pi1"], s) == apply_word(["pi1", "s6"], s)


class TestTranslation:
    def test_parameter_shift(self):
        reports = check_translation(5, 3)
        assert all(r.status == "pass" for r in reports)
        assert any(r.name == "parametershift" for r in reports)

    @given(states())
    @settings(max_examples=15, deadline=None)
    def test_shift_formula(self, s):
        t = safe(translation_T, s)
        assert t.b == shifted_b(s)
        assert t.q == s.q

    def test_painleve_residuals(self):
        reports = verify_weyl_painleve(5, 4)
        assert {r.name for r in reports} >= {"weyl1", "weyl2"}
        assert all(r.status == "pass" for r in reports)

    def test_residuals_scale_invariant(self):
        rng = random.Random(8)
        done = 0
        while done < 3:
            s = WeylState(tuple(Fraction(rng.randint(-6, 6) or 1, rng.randint(1, 6)) for _ in range(8)), Fraction(2, 5), Fraction(-3, 4))
            lam = Fraction(rng.randint(2, 7), rng.randint(1, 7))
            try:
                scaled = weyl_residuals(scaling(s, lam))
            except ZeroDivisionError:
                continue
            assert all(l == r for l, r in scaled.values())
            done += 1


class TestScaling:
    def test_identity_and_q(self):
        s = WeylState(tuple(Fraction(k, 5) for k in range(1, 9)), 2, 3)
        assert scaling(s, 1) == s
        assert scaling(s, Fraction(7, 3)).q == s.q
        with pytest.raises(ValueError):
            scaling(s, 0)

    def test_commutes_with_generators(self):
        assert all(r.status == "pass" for r in scaling_commutes(5, 2))


class TestDirections:
    def test_words(self):
        assert all(r.status == "pass" for r in weyl_direction_words(5, 6))

    @given(states())
    @settings(max_examples=10, deadline=None)
    def test_contiguity_identically(self, s):
        for l, r in safe(direction_residuals, s).values():
            assert l == r

    @pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (2, 2)])
    def test_agrees_with_pade(self, m, n):
        p, data = params_for(12, m, n, accept=direction_data)
        reports = weyl_vs_pade(p, data)
        assert all(r.status == "pass" for r in reports)
        s = WeylState.from_params(p, data["E6_T1"].f, data["E6_T1"].g)
        assert direction_g(s)["g2"] == data["E6_T2"].g
