"""CLI surface: subcommands, exit codes, output determinism."""

import json
import math

from hbpv.cli import main
from hbpv.extbeta import Extension, extended_beta
from hbpv.fixtures import FixtureRecord, dump_fixtures

HBPV_FLAGS = [
    "--b1", "1", "--b2", "1", "--b3", "1", "--c1", "2", "--c2", "2", "--c3", "2",
    "--p-re", "1", "--nu", "0.5",
]


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEval:
    def test_hbpv_at_origin_is_beta_ratio(self, capsys):
        code, out, _ = run(capsys, ["eval", "hbpv", *HBPV_FLAGS])
        assert code == 0
        payload = json.loads(out)
        want = extended_beta(1.0, 1.0, Extension(1.0, 0.5))
        assert abs(payload["value_re"] - want.real) <= 1e-12 * abs(want.real)
        assert payload["converged"] is True

    def test_region_violation_exits_2(self, capsys):
        code, out, err = run(capsys, [
            "eval", "hb", "--b1", "1", "--b2", "1", "--b3", "1",
            "--c1", "2", "--c2", "2", "--c3", "2",
            "--x-re", "0.5", "--y-re", "0.5", "--z-re", "0.5",
        ])
        assert code == 2
        assert out == ""
        assert "domain error" in err

    def test_besselk_closed_form(self, capsys):
        code, out, _ = run(capsys, ["eval", "besselk", "--nu", "0.5", "--z-re", "2"])
        assert code == 0
        payload = json.loads(out)
        want = math.sqrt(math.pi / 4.0) * math.exp(-2.0)
        assert abs(payload["value_re"] - want) <= 1e-13 * want

    def test_missing_flag_exits_2(self, capsys):
        code, _, err = run(capsys, ["eval", "besselk", "--z-re", "2"])
        assert code == 2
        assert "--nu" in err

    def test_determinism(self, capsys):
        argv = ["eval", "hbpv", *HBPV_FLAGS, "--x-re", "0.04", "--y-re", "0.04", "--z-re", "0.04"]
        _, out1, _ = run(capsys, argv)
        _, out2, _ = run(capsys, argv)
        assert out1 == out2

    def test_non_convergence_exits_3(self, capsys, monkeypatch):
        import hbpv.cli as cli
        from hbpv.series import EvalResult

        monkeypatch.setattr(
            cli, "_evaluate", lambda fn, ns: EvalResult(1.0 + 0.0j, 400, 0.5, False)
        )
        code, out, err = run(capsys, ["eval", "hbpv", *HBPV_FLAGS])
        assert code == 3
        assert json.loads(out)["converged"] is False
        assert "non-convergence" in err


class TestVerify:
    def test_recursion_suite_passes(self, capsys):
        code, out, _ = run(capsys, ["verify", "recursion", "--samples", "2", "--seed", "7"])
        assert code == 0
        payload = json.loads(out)
        assert payload["passed"] is True
        names = {c["name"] for c in payload["checks"]}
        assert "recursion_b3" in names and "recursion_c_permuted" in names
        assert all(c["max_rel_residual"] <= 1e-9 for c in payload["checks"])

    def test_zero_samples_trivially_pass(self, capsys):
        code, out, _ = run(capsys, ["verify", "all", "--samples", "0", "--seed", "1"])
        assert code == 0
        payload = json.loads(out)
        assert payload["passed"] is True
        assert payload["checks"] == []

    def test_seeded_determinism(self, capsys):
        argv = ["verify", "bound", "--samples", "3", "--seed", "11"]
        _, out1, _ = run(capsys, argv)
        _, out2, _ = run(capsys, argv)
        assert out1 == out2


class TestTable:
    def test_single_point_matches_eval(self, capsys, tmp_path):
        out_path = tmp_path / "grid.csv"
        argv_eval = ["eval", "hbpv", *HBPV_FLAGS,
                     "--x-re", "0.03", "--y-re", "0.0", "--z-re", "0.0"]
        _, eval_out, _ = run(capsys, argv_eval)
        eval_payload = json.loads(eval_out)

        code, _, _ = run(capsys, [
            "table", "hbpv", *HBPV_FLAGS,
            "--axis", "x-re=0.03:0.03:1", "--out", str(out_path),
        ])
        assert code == 0
        header, row = out_path.read_text().strip().split("\n")
        assert header == "x-re,value_re,value_im,converged"
        cells = row.split(",")
        assert float(cells[1]) == eval_payload["value_re"]

    def test_monotone_in_x_for_positive_parameters(self, capsys, tmp_path):
        out_path = tmp_path / "grid.csv"
        code, _, _ = run(capsys, [
            "table", "hb",
            "--b1", "1", "--b2", "1", "--b3", "1", "--c1", "2", "--c2", "2", "--c3", "2",
            "--axis", "x-re=0.01:0.05:3", "--out", str(out_path),
        ])
        assert code == 0
        rows = out_path.read_text().strip().split("\n")[1:]
        values = [float(r.split(",")[1]) for r in rows]
        assert values == sorted(values)
        assert values[0] < values[-1]

    def test_empty_axis_header_only(self, capsys, tmp_path):
        out_path = tmp_path / "grid.csv"
        code, _, _ = run(capsys, [
            "table", "besselk", "--nu", "0.5",
            "--axis", "z-re=1:2:0", "--out", str(out_path),
        ])
        assert code == 0
        assert out_path.read_text() == "z-re,value_re,value_im,converged\n"

    def test_domain_violation_no_partial_file(self, capsys, tmp_path):
        out_path = tmp_path / "grid.csv"
        code, _, err = run(capsys, [
            "table", "hb",
            "--b1", "1", "--b2", "1", "--b3", "1", "--c1", "2", "--c2", "2", "--c3", "2",
            "--axis", "x-re=0.1:2.0:4", "--out", str(out_path),
        ])
        assert code == 2
        assert not out_path.exists()


class TestFixturesCommand:
    def test_missing_file_exit_4(self, capsys, tmp_path):
        code, _, err = run(capsys, ["fixtures", str(tmp_path / "none.json")])
        assert code == 4
        assert "not found" in err

    def test_unreadable_file_exit_4(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        code, _, _ = run(capsys, ["fixtures", str(path)])
        assert code == 4

    def test_empty_list_exit_0(self, capsys, tmp_path):
        path = tmp_path / "empty.json"
        path.write_text("[]\n")
        code, out, _ = run(capsys, ["fixtures", str(path)])
        assert code == 0
        assert json.loads(out)["passed"] is True

    def test_perturbed_value_exit_1(self, capsys, tmp_path):
        want = math.sqrt(math.pi / 4.0) * math.exp(-2.0)
        rec = FixtureRecord(
            function="BesselK",
            args={"nu": "0.5", "z_re": "2", "z_im": "0"},
            value_re=format(want * (1.0 + 1e-3), ".35g"),
            value_im="0",
            precision_digits=35,
            generator="test",
        )
        path = tmp_path / "fix.json"
        path.write_text(dump_fixtures([rec]))
        code, out, _ = run(capsys, ["fixtures", str(path)])
        assert code == 1
        assert json.loads(out)["passed"] is False
