from __future__ import annotations

from fractions import Fraction

import pytest

from qpade.verify import lax_ready
from qpade.qkernel import Inadmissible, ParamSet
from qpade.verify import (
    CheckReport,
    compare,
    constant_A,
    constant_B_reference,
    direction_data,
    float_sanity,
    special_point_values,
    special_values,
    verify_det_solution,
    verify_directions,
    verify_e6,
    verify_kernel,
    verify_lax,
    verify_pade,
    verify_qp6,
)
from conftest import params_for


def statuses(reports):
    return {r.name: r.status for r in reports}


def assert_all_pass(reports):
    bad = [(r.name, r.lhs, r.rhs) for r in reports if r.status == "fail"]
    assert not bad, bad


def test_record_schema():
    p = ParamSet(Fraction(2, 5), 2, 3, 5, 7, m=1, n=1)
    rec = compare("x", p, Fraction(1, 3), Fraction(1, 3), k=1).as_record()
    assert set(rec) == {"check", "params", "status", "lhs", "rhs", "witness"}
    assert rec["lhs"] == "1/3" and rec["status"] == "pass" and rec["witness"] == {"k": "1"}
    assert compare("x", p, 1, 2).status == "fail"


def test_kernel_report():
    reports = verify_kernel(Fraction(-3, 7))
    assert len(reports) == 3 * 28
    assert_all_pass(reports)


@pytest.mark.parametrize("m,n", [(0, 0), (1, 0), (0, 2), (2, 2)])
def test_pade_report(m, n):
    assert_all_pass(verify_pade(params_for(1, m, n)))


@pytest.mark.parametrize("m,n", [(1, 1), (2, 2)])
def test_lax_report(m, n):
    p, _ = params_for(2, m, n, accept=lax_ready)
    reports = verify_lax(p)
    assert_all_pass(reports)
    assert all(r.status == "pass" for r in reports)


class TestCompatibility:
    @pytest.mark.parametrize("m,n", [(0, 0), (1, 1), (2, 0), (1, 2), (2, 2)])
    def test_qp6(self, m, n):
        p, reports = params_for(3, m, n, accept=verify_qp6)
        assert {"qp6g", "qp6f", "qp6f1", "qp6f2"} <= set(statuses(reports))
        assert_all_pass(reports)

    @pytest.mark.parametrize("m,n", [(1, 0), (1, 1), (2, 1), (2, 2)])
    def test_e6(self, m, n):
        p, reports = params_for(4, m, n, accept=verify_e6)
        assert {"e6g", "e6f", "e6c1c2", "e6c1c22"} <= set(statuses(reports))
        assert_all_pass(reports)

    def test_e6_needs_m(self):
        with pytest.raises(Inadmissible):
            verify_e6(params_for(4, 0, 1))


class TestSolutions:
    @pytest.mark.parametrize("m,n", [(0, 0), (1, 1), (2, 1), (1, 2), (2, 2)])
    def test_special_values(self, m, n):
        p, reports = params_for(5, m, n, accept=special_values)
        assert len(reports) >= 8
        assert_all_pass(reports)

    def test_special_point_values_count(self):
        assert len(special_point_values(params_for(5, 1, 1))) == 8

    @pytest.mark.parametrize("m,n", [(1, 0), (1, 1), (2, 1), (2, 2)])
    def test_det_solution(self, m, n):
        p, reports = params_for(6, m, n, accept=verify_det_solution)
        st = statuses(reports)
        assert st["fg_layer_i_f"] == "pass"
        assert st["fg_layer_i_g"] == "pass"
        assert st["gc_corrected"] == "pass"
        assert st["fc_reference"] == "pass"
        assert_all_pass(reports)

    def test_reference_b_disagrees_and_is_recorded(self):
        # the reference B is not the constant the data require; kept visible as a skip
        p, reports = params_for(7, 2, 1, accept=verify_det_solution)
        rec = next(r for r in reports if r.name == "gc_reference")
        assert rec.status == "skip"
        assert rec.witness["reference_B"] != rec.witness["empirical_B"]
        # empirical_B is what the reference determinants would need at this sample
        assert Fraction(rec.witness["empirical_B"]) != constant_B_reference(p)
        assert statuses(reports)["gc_corrected"] == "pass"

    def test_g_layer_needs_m(self):
        _, reports = params_for(6, 0, 2, accept=verify_det_solution)
        assert statuses(reports)["fg_layer_i_g"] == "skip"

    def test_constant_A_is_finite(self):
        assert constant_A(params_for(8, 1, 1)) != 0


class TestDirections:
    @pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (1, 2), (2, 2)])
    def test_all_relations(self, m, n):
        p, data = params_for(9, m, n, accept=direction_data)
        reports = verify_directions(p, data)
        names = set(statuses(reports))
        for name in ("type2g", "type3g", "type4g", "g2_g_relation", "weylpainleveg", "type2painleve",
                     "type3painleve", "type4painleve"):
            assert name in names
        assert_all_pass(reports)

    def test_needs_m_and_n(self):
        with pytest.raises(Inadmissible):
            verify_directions(params_for(9, 1, 0))


def test_float_sanity_is_tagged():
    rec = float_sanity()
    assert rec.status == "pass"
    assert rec.witness["kind"].startswith("floating-point")
    assert float(rec.lhs) <= 1e-8
    assert isinstance(rec, CheckReport)
