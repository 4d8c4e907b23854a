from __future__ import annotations

import json

import pytest

from qpade.cli import build_parser, main, parse_rational, parse_rationals


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestParsing:
    def test_rationals(self):
        from fractions import Fraction

        assert parse_rational("2/5") == Fraction(2, 5)
        assert parse_rational("-3") == -3
        assert parse_rationals("2,3/4,-5/6") == (2, Fraction(3, 4), Fraction(-5, 6))

    @pytest.mark.parametrize("bad", ["0.5", "1/0", "x", "1/-2", ""])
    def test_rejects(self, bad):
        import argparse

        with pytest.raises(argparse.ArgumentTypeError):
            parse_rational(bad)

    def test_bad_flag_exits_2(self):
        with pytest.raises(SystemExit) as info:
            build_parser().parse_args(["verify", "d5", "--q", "0.4"])
        assert info.value.code == 2


class TestVerify:
    def test_explicit_d5(self, capsys):
        code, _, err = run(capsys, "verify", "d5", "--q", "2/5", "--a", "2,3,5,7", "--m", "1", "--n", "1")
        assert code == 0, err

    def test_e6_needs_m(self, capsys):
        code, _, err = run(capsys, "verify", "e6", "--m", "0", "--n", "1")
        assert code == 2 and "m >= 1" in err

    def test_samples_zero(self, capsys):
        assert run(capsys, "verify", "pade", "--samples", "0")[0] == 2

    def test_explicit_needs_four_a(self, capsys):
        assert run(capsys, "verify", "d5", "--q", "2/5", "--a", "2,3")[0] == 2

    def test_inadmissible_explicit(self, capsys):
        assert run(capsys, "verify", "d5", "--q", "1", "--a", "2,3,5,7")[0] == 2

    def test_solutions_json(self, capsys, tmp_path):
        out = tmp_path / "out.json"
        code, _, _ = run(capsys, "verify", "solutions", "--samples", "3", "--seed", "7", "--json", str(out))
        assert code == 0
        records = json.loads(out.read_text())
        names = {r["check"] for r in records}
        assert any(n.startswith("qhge_") for n in names)
        assert {"fg_layer_i_f", "fc_reference", "gc_corrected"} <= names
        for r in records:
            assert set(r) == {"check", "params", "status", "lhs", "rhs", "witness"}
            assert r["status"] in {"pass", "fail", "skip"}
        keys = [(r["check"], int(r["witness"]["sample"])) for r in records]
        assert keys == sorted(keys)

    def test_float_sanity_flag(self, capsys):
        code, out, _ = run(capsys, "verify", "kernel", "--samples", "1", "--float-sanity", "--format", "json")
        records = json.loads(out)
        fl = [r for r in records if r["check"] == "float_sanity_d5"]
        assert code == 0 and len(fl) == 1 and fl[0]["witness"]["kind"].startswith("floating-point")

    def test_csv_format(self, capsys):
        code, out, _ = run(capsys, "verify", "kernel", "--samples", "1", "--format", "csv")
        lines = out.strip().split("\n")
        assert code == 0 and lines[0] == "check,sample,status,lhs,rhs" and len(lines) == 85


class TestQrt:
    def test_e6_orbit(self, capsys):
        code, out, _ = run(capsys, "qrt", "--variant", "e6", "--steps", "25", "--seed", "3")
        rows = out.strip().split("\n")
        assert code == 0 and rows[0] == "step,x,y,lambda" and len(rows) == 27
        assert len({r.split(",")[3] for r in rows[1:]}) == 1

    def test_zero_steps(self, capsys):
        code, out, _ = run(capsys, "qrt", "--steps", "0")
        assert code == 0 and len(out.strip().split("\n")) == 2

    def test_condition_violated(self, capsys):
        code, _, err = run(capsys, "qrt", "--variant", "qp6", "--a", "1,2,3,4,5,6,7,8")
        assert code == 1 and "qrt_condition_violated" in err

    def test_explicit_tuple(self, capsys, tmp_path):
        # a8 = a3 a4 a5 a6 / (a1 a2 a7) makes the condition 1
        path = tmp_path / "orbit.csv"
        code, _, err = run(
            capsys, "qrt", "--variant", "qp6", "--a", "2,3,5,7,11,13,17,5005/102",
            "--x0", "1/4", "--y0=-2/9", "--steps", "5", "--csv", str(path),
        )
        assert code == 0, err
        assert len(path.read_text().strip().split("\n")) == 7

    def test_negative_steps(self, capsys):
        assert run(capsys, "qrt", "--steps", "-1")[0] == 2


class TestWeyl:
    def test_relations(self, capsys):
        assert run(capsys, "weyl", "relations", "--samples", "5", "--seed", "1")[0] == 0

    def test_translation_witness(self, capsys):
        code, out, _ = run(capsys, "weyl", "translation", "--samples", "5", "--format", "json")
        assert code == 0
        assert any(r["check"] == "parametershift" for r in json.loads(out))

    def test_zero_samples(self, capsys):
        assert run(capsys, "weyl", "relations", "--samples", "0")[0] == 2
