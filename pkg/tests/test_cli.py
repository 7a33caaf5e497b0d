"""CLI: parsing, subcommands, exit codes, JSON output."""

import json

import pytest

from pisot import errors
from pisot.algebraic import IntPoly
from pisot.cli import main, parse_poly, run


def invoke(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestParsePoly:
    def test_basic(self):
        assert parse_poly("x^2-x-1") == IntPoly((-1, -1, 1))
        assert parse_poly("x^3 - x - 1") == IntPoly((-1, -1, 0, 1))
        assert parse_poly("  -x + x^2 - 1") == IntPoly((-1, -1, 1))
        assert parse_poly("2x^2 + 3") == IntPoly((3, 0, 2))

    def test_combines_like_terms(self):
        assert parse_poly("x^2 + x - x - 1") == IntPoly((-1, 0, 1))

    @pytest.mark.parametrize("bad", ["", "x^", "x +", "^2", "x^2 + + 1", "y^2", "5"])
    def test_rejects_malformed(self, bad):
        with pytest.raises(errors.PolySyntaxError):
            parse_poly(bad)

    def test_offset_reported(self):
        with pytest.raises(errors.PolySyntaxError) as exc:
            parse_poly("x^2 -")
        assert exc.value.offset == 5


class TestPow:
    def test_lucas(self, capsys):
        code, out, _ = invoke(capsys, "pow", "--minpoly", "x^2-x-1", "-n", "10")
        assert code == 0 and out.strip() == "123"

    def test_modular_json(self, capsys):
        code, out, _ = invoke(
            capsys,
            "pow", "--minpoly", "x^2-x-1",
            "-n", "1000000000000000000",
            "-m", "2305843009213693951",
            "--json",
        )
        assert code == 0
        obj = json.loads(out)
        assert obj["result"] == "1682287737405264361"

    def test_huge_n_without_modulus_is_usage_error(self, capsys):
        code, _, err = invoke(capsys, "pow", "--minpoly", "x^2-x-1", "-n", "10000001")
        assert code == 2 and "needs -m" in err

    def test_non_pisot_fails_cleanly(self, capsys):
        code, _, err = invoke(capsys, "pow", "--minpoly", "x^2+2", "-n", "5")
        assert code == 1 and "NotPisot" in err

    def test_non_monic_is_usage_error(self, capsys):
        code, _, err = invoke(capsys, "pow", "--minpoly", "2x^2-x-1", "-n", "5")
        assert code == 2 and "NotMonic" in err

    def test_syntax_error_is_usage_error(self, capsys):
        code, _, err = invoke(capsys, "pow", "--minpoly", "x^2 -", "-n", "5")
        assert code == 2 and "PolySyntaxError" in err

    def test_negative_n_rejected(self, capsys):
        code, _, err = invoke(capsys, "pow", "--minpoly", "x^2-x-1", "-n", "-3")
        assert code == 2


class TestThresholdAndBound:
    def test_threshold(self, capsys):
        code, out, _ = invoke(capsys, "threshold", "--minpoly", "x^3-x-1")
        assert code == 0 and out.strip() == "10"

    def test_threshold_json(self, capsys):
        code, out, _ = invoke(
            capsys, "threshold", "--minpoly", "x^2-x-1", "--json"
        )
        obj = json.loads(out)
        assert obj["threshold_n0"] == 2

    def test_bound(self, capsys):
        code, out, _ = invoke(
            capsys, "bound", "--degree", "4", "--disc", "1125", "--delta", "1/2"
        )
        assert code == 0
        assert float(out.strip()) == pytest.approx(268.328157, abs=1e-4)


class TestSLPCommands:
    def test_emit_eval_round_trip(self, capsys, tmp_path):
        path = tmp_path / "prog.slp"
        code, _, _ = invoke(
            capsys, "slp", "emit", "--minpoly", "x^2-x-1", "-n", "10", "-o", str(path)
        )
        assert code == 0
        code, out, _ = invoke(capsys, "slp", "eval", str(path))
        assert code == 0 and out.strip() == "123"
        code, out, _ = invoke(capsys, "slp", "eval", str(path), "-m", "100", "--json")
        assert code == 0 and json.loads(out)["result"] == 23

    def test_emit_to_stdout(self, capsys):
        code, out, _ = invoke(capsys, "slp", "emit", "--minpoly", "x^2-x-1", "-n", "3")
        assert code == 0 and out.startswith("slp v1\nv0 = one\n")

    def test_eval_malformed_file(self, capsys, tmp_path):
        path = tmp_path / "bad.slp"
        path.write_text("slp v1\nv0 = one\nv1 = frob v0 v0\nresult v1\n")
        code, _, err = invoke(capsys, "slp", "eval", str(path))
        assert code == 2 and "MalformedProgram" in err

    def test_eval_missing_file(self, capsys, tmp_path):
        code, _, err = invoke(capsys, "slp", "eval", str(tmp_path / "nope.slp"))
        assert code == 1


class TestFindAndVerify:
    def test_verify_fixture_json(self, capsys):
        code, out, _ = invoke(
            capsys,
            "verify", "--conductor", "15",
            "--coeffs", "2105,1215,1440,139",
            "--epsilon", "0.5",
            "--json",
        )
        assert code == 0
        obj = json.loads(out)
        assert obj["minpoly"] == ["1", "21", "-229", "-4899", "1"]

    def test_verify_epsilon_violation(self, capsys):
        code, _, err = invoke(
            capsys,
            "verify", "--conductor", "15",
            "--coeffs", "2105,1215,1440,139",
            "--epsilon", "0.01",
        )
        assert code == 1 and "NotPisot" in err

    def test_verify_bad_coeffs(self, capsys):
        code, _, err = invoke(
            capsys, "verify", "--conductor", "15", "--coeffs", "1,2,three,4"
        )
        assert code == 2

    def test_find_requires_field(self, capsys):
        code, _, err = invoke(capsys, "find")
        assert code == 2

    def test_find_explicit_file(self, capsys, tmp_path):
        import mpmath
        from mpmath import mp

        with mp.workprec(220):
            s = mpmath.nstr(mpmath.sqrt(2), 60)
        spec = {
            "kind": "explicit",
            "basis_labels": ["1", "sqrt2"],
            "embedding_rows": [["1", s], ["1", "-" + s]],
            "precision_bits": 190,
            "discriminant": "8",
        }
        path = tmp_path / "field.json"
        path.write_text(json.dumps(spec))
        code, out, _ = invoke(
            capsys, "find", "--field", str(path), "--precision", "128", "--json"
        )
        assert code == 0
        obj = json.loads(out)
        assert obj["minpoly"] == ["-1", "-2", "1"]

    def test_unknown_subcommand(self, capsys):
        assert main(["frobnicate"]) == 2
