"""End-to-end command-line behavior: documents in, one JSON document out."""

import json

import pytest

from subres import MultiRootSet, Rat
from subres.cli import main
from subres.roots_formulas import sres_one
from subres.serialize import unipoly_to_json


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def out_json(capsys, argv, expect=0):
    code, out, err = run(capsys, argv)
    assert code == expect, err
    return json.loads(out)


def system_doc(c=("c0", "c1", "c2"), with_runparams=True, with_roots=True):
    doc = {
        "n": 2,
        "polynomials": [
            [{"exponents": [1, 1], "coeff": "1"}],
            [
                {"exponents": [2, 0], "coeff": "1"},
                {"exponents": [0, 2], "coeff": "1"},
                {"exponents": [0, 1], "coeff": "-2"},
            ],
            [
                {"exponents": [0, 0], "coeff": str(c[0])},
                {"exponents": [1, 0], "coeff": str(c[1])},
                {"exponents": [0, 1], "coeff": str(c[2])},
            ],
        ],
        "degrees": [2, 2, 1],
    }
    if with_runparams:
        doc["t"] = 2
        doc["S"] = [[2, 0]]
    if with_roots:
        doc["roots"] = [{"point": ["0", "0"]}, {"point": ["0", "2"]}]
    return doc


class TestUnivariateCommands:
    def test_coeffs_double_root_against_cube(self, capsys):
        got = out_json(capsys, ["coeffs", "--f", "[1,-2,1]", "--g", "[0,0,0,1]", "-t", "1"])
        assert got == ["-2", "3"]

    def test_coeffs_split_roots_against_cube(self, capsys):
        got = out_json(capsys, ["coeffs", "--f", "[2,-3,1]", "--g", "[0,0,0,1]", "-t", "1"])
        assert got == ["-6", "7"]

    def test_roots_variants_agree(self, capsys):
        for variant in ("compact", "block", "wronskian-full"):
            got = out_json(
                capsys,
                ["roots", "--A", "[[1,2]]", "--B", "[[0,3]]", "-t", "1", "--variant", variant],
            )
            assert got == ["-2", "3"]

    def test_hermite(self, capsys):
        got = out_json(capsys, ["hermite", "--A", "[[1,2]]", "--B", "[[0,3]]"])
        assert got == ["-2", "3"]

    def test_one_matches_library(self, capsys):
        a = MultiRootSet([(Rat(0), 2), (Rat(1), 1)])
        b = MultiRootSet([(Rat(2), 2), (Rat(3), 1)])
        got = out_json(capsys, ["one", "--A", "[[0,2],[1,1]]", "--B", "[[2,2],[3,1]]"])
        assert got == unipoly_to_json(sres_one(a, b))

    def test_dsum(self, capsys):
        got = out_json(capsys, ["dsum", "--A", "[[3,1]]", "--B", "[[1,1],[2,1]]", "-p", "0", "-q", "1"])
        assert got == ["-3", "1"]

    def test_vandermonde_square(self, capsys):
        got = out_json(capsys, ["vandermonde", "--A", "[[0,2],[1,1]]"])
        assert set(got) == {"matrix", "det"}
        assert len(got["matrix"]) == 3

    def test_vandermonde_rectangular_has_no_det(self, capsys):
        got = out_json(capsys, ["vandermonde", "--A", "[[0,2],[1,1]]", "-u", "2"])
        assert set(got) == {"matrix"}
        assert len(got["matrix"]) == 2

    def test_wronskian(self, capsys):
        got = out_json(capsys, ["wronskian", "--A", "[[1,2]]", "--h", "[0,0,1]"])
        assert got == {"matrix": [["1", "2"], ["1", "3"]], "det": "1"}


class TestMultivariateCommands:
    def test_mv_macaulay_numeric(self, capsys):
        doc = json.dumps(system_doc(c=(1, 1, 1), with_roots=False))
        assert out_json(capsys, ["mv", "--system", doc]) == "-3"

    def test_mv_poisson_numeric(self, capsys):
        doc = json.dumps(system_doc(c=(1, 1, 1)))
        assert out_json(capsys, ["mv", "--system", doc, "--route", "poisson"]) == "-3"

    def test_mv_symbolic_both_routes(self, capsys):
        doc = json.dumps(system_doc())
        want = "-c0^3 - 2*c0^2*c2"
        assert out_json(capsys, ["mv", "--system", doc]) == want
        assert out_json(capsys, ["mv", "--system", doc, "--route", "poisson"]) == want

    def test_mv_flag_overrides(self, capsys):
        doc = json.dumps(system_doc(c=(1, 1, 1), with_runparams=False, with_roots=False))
        got = out_json(capsys, ["mv", "--system", doc, "-t", "2", "--S", "[[0,2]]"])
        assert got == "-1"  # delta with S={x2^2} is -c0^3

    def test_mv_missing_t_is_domain_error(self, capsys):
        doc = json.dumps(system_doc(with_runparams=False, with_roots=False))
        code, _, err = run(capsys, ["mv", "--system", doc])
        assert code == 2
        assert "fix t" in err

    def test_mv_at_file(self, capsys, tmp_path):
        path = tmp_path / "system.json"
        path.write_text(json.dumps(system_doc(c=(1, 1, 1))), encoding="utf-8")
        assert out_json(capsys, ["mv", "--system", "@%s" % path]) == "-3"

    def test_mv_singular_quotient_is_structural_error(self, capsys):
        doc = system_doc(c=(1, 1, 1))
        doc["T_override"] = {"2": [[1, 1]]}
        code, _, err = run(capsys, ["mv", "--system", json.dumps(doc), "--route", "poisson"])
        assert code == 3
        assert "V_T is singular" in err

    def test_dual_circle_line(self, capsys):
        gens = json.dumps(
            [
                [{"exponents": [1, 1], "coeff": "1"}],
                [
                    {"exponents": [2, 0], "coeff": "1"},
                    {"exponents": [0, 2], "coeff": "1"},
                    {"exponents": [0, 1], "coeff": "-2"},
                ],
            ]
        )
        got = out_json(capsys, ["dual", "--generators", gens, "--point", '["0","0"]'])
        assert got["dimension"] == 3
        assert got["order"] == 2
        assert got["truncated"] is False
        assert got["point"] == ["0", "0"]
        third = got["functionals"][2]["terms"]
        assert third == [
            {"alpha": [0, 1], "coeff": "1/2"},
            {"alpha": [2, 0], "coeff": "1"},
        ]

    def test_dual_order_bound_truncates(self, capsys):
        gens = json.dumps(
            [
                [{"exponents": [1, 2], "coeff": "2"}, {"exponents": [4, 0], "coeff": "5"}],
                [{"exponents": [2, 1], "coeff": "2"}, {"exponents": [0, 4], "coeff": "5"}],
            ]
        )
        got = out_json(capsys, ["dual", "--generators", gens, "--point", '["0","0"]', "--order-bound", "2"])
        assert got["truncated"] is True
        assert got["order"] is None


class TestVerifyCommand:
    def test_univariate_battery_passes(self, capsys):
        got = out_json(capsys, ["verify", "--A", "[[0,2],[1,1]]", "--B", "[[2,2],[3,2]]"])
        assert got["ok"] is True
        assert all(c["ok"] for c in got["checks"])
        assert len(got["checks"]) >= 5

    def test_system_battery_passes(self, capsys):
        doc = json.dumps(system_doc())
        got = out_json(capsys, ["verify", "--system", doc])
        assert got["ok"] is True

    def test_doctored_dual_fails_with_exit_one(self, capsys):
        doc = system_doc()
        doc["roots"][0]["dual"] = [
            {"terms": [{"alpha": [0, 0], "coeff": "1"}]},
            {"terms": [{"alpha": [1, 0], "coeff": "1"}]},
            {"terms": [{"alpha": [0, 1], "coeff": "1"}]},  # misses the 2*d(2,0) part
        ]
        got = out_json(capsys, ["verify", "--system", json.dumps(doc)], expect=1)
        assert got["ok"] is False
        bad = [c for c in got["checks"] if not c["ok"]]
        assert bad and all("detail" in c for c in bad)

    def test_requires_one_input_mode(self, capsys):
        code, _, err = run(capsys, ["verify"])
        assert code == 2
        assert "either --system or the pair" in err
        code, _, err = run(
            capsys,
            ["verify", "--A", "[[1,1]]", "--B", "[[2,1]]", "--system", json.dumps(system_doc())],
        )
        assert code == 2


class TestErrorReporting:
    def test_malformed_json(self, capsys):
        code, _, err = run(capsys, ["coeffs", "--f", "[1,", "--g", "[1]", "-t", "0"])
        assert code == 2
        assert "malformed JSON at line" in err

    def test_float_rejected(self, capsys):
        code, _, err = run(capsys, ["coeffs", "--f", "[0.5, 1]", "--g", "[0,1]", "-t", "0"])
        assert code == 2
        assert "floats are not accepted" in err

    def test_domain_error_exit_two(self, capsys):
        code, _, err = run(capsys, ["coeffs", "--f", "[1,1]", "--g", "[1,1]", "-t", "1"])
        assert code == 2
        assert "error:" in err

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, ["coeffs", "--f", "@/nonexistent.json", "--g", "[1]", "-t", "0"])
        assert code == 2
        assert "cannot read" in err

    def test_output_is_single_json_document(self, capsys):
        code, out, _ = run(capsys, ["coeffs", "--f", "[1,-2,1]", "--g", "[0,0,0,1]", "-t", "1"])
        assert code == 0
        json.loads(out)  # exactly one parseable value
        assert out.endswith("\n")
