import io
import json

import pytest

from powsum import cli
from powsum.coeffs import CoefficientSet
from powsum.oracle import direct_sum


def run_cli(argv, stdin_text=None, monkeypatch=None):
    if stdin_text is not None:
        assert monkeypatch is not None
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin_text))
    return cli.main(argv)


class TestMoment:
    def test_single_power(self, monkeypatch, capsys):
        code = run_cli(["moment", "-K", "2"], "3\n1\n4\n", monkeypatch)
        assert code == 0
        report = json.loads(capsys.readouterr().out)
        assert report["N"] == 3
        assert report["results"] == [
            {
                "K": 2,
                "S": "17",
                "ops": {"general_mults": 0, "constant_mults": 3, "additions": 8},
            }
        ]

    def test_power_zero_is_plain_sum(self, monkeypatch, capsys):
        assert run_cli(["moment", "-K", "0"], "5\n7\n", monkeypatch) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["results"][0]["S"] == "12"

    def test_multiple_powers_single_pass(self, monkeypatch, capsys):
        code = run_cli(["moment", "-K", "0", "-K", "1", "-K", "2"], "1\n1\n1\n1\n", monkeypatch)
        assert code == 0
        report = json.loads(capsys.readouterr().out)
        assert [row["S"] for row in report["results"]] == ["4", "6", "14"]
        assert [row["K"] for row in report["results"]] == [0, 1, 2]

    def test_comments_blanks_and_whitespace_ignored(self, monkeypatch, capsys):
        text = "# header comment\n\n  3 \n1\n# mid comment\n4\n\n"
        assert run_cli(["moment", "-K", "2"], text, monkeypatch) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["N"] == 3
        assert report["results"][0]["S"] == "17"

    def test_values_match_direct_sum(self, monkeypatch, capsys):
        v = [9, -4, 0, 123456, -99, 7]
        text = "".join(f"{x}\n" for x in v)
        assert run_cli(["moment", "-K", "3", "-K", "5"], text, monkeypatch) == 0
        report = json.loads(capsys.readouterr().out)
        assert [int(row["S"]) for row in report["results"]] == [
            direct_sum(v, 3),
            direct_sum(v, 5),
        ]

    def test_negative_samples_accepted(self, monkeypatch, capsys):
        assert run_cli(["moment", "-K", "1"], "-5\n-6\n", monkeypatch) == 0
        assert json.loads(capsys.readouterr().out)["results"][0]["S"] == "-6"

    def test_parse_error_reports_line_number(self, monkeypatch, capsys):
        code = run_cli(["moment", "-K", "1"], "1\n2\nbogus\n4\n", monkeypatch)
        assert code == 2
        err = capsys.readouterr().err
        assert "line 3" in err and "bogus" in err

    def test_float_literal_rejected_on_exact_path(self, monkeypatch, capsys):
        assert run_cli(["moment", "-K", "1"], "1.5\n", monkeypatch) == 2

    def test_empty_stream_exits_three(self, monkeypatch, capsys):
        assert run_cli(["moment", "-K", "2"], "# only comments\n\n", monkeypatch) == 3

    def test_missing_power_is_usage_error(self, monkeypatch, capsys):
        assert run_cli(["moment"], "1\n", monkeypatch) == 2

    def test_file_input(self, tmp_path, capsys):
        path = tmp_path / "samples.txt"
        path.write_text("3\n1\n4\n")
        assert cli.main(["moment", "-K", "2", "--input", str(path)]) == 0
        assert json.loads(capsys.readouterr().out)["results"][0]["S"] == "17"

    def test_missing_file_is_usage_error(self, capsys):
        assert cli.main(["moment", "-K", "2", "--input", "/nonexistent/x"]) == 2

    def test_expect_n_match(self, monkeypatch, capsys):
        assert run_cli(["moment", "-K", "2", "--expect-n", "3"], "3\n1\n4\n", monkeypatch) == 0
        assert json.loads(capsys.readouterr().out)["results"][0]["S"] == "17"

    def test_expect_n_mismatch(self, monkeypatch, capsys):
        code = run_cli(["moment", "-K", "2", "--expect-n", "5"], "3\n1\n4\n", monkeypatch)
        assert code == 2
        assert "expected 5 samples" in capsys.readouterr().err

    def test_plain_format(self, monkeypatch, capsys):
        code = run_cli(
            ["moment", "-K", "0", "-K", "2", "--format", "plain"], "3\n1\n4\n", monkeypatch
        )
        assert code == 0
        assert capsys.readouterr().out == "0 8\n2 17\n"

    def test_float_mode(self, monkeypatch, capsys):
        code = run_cli(["moment", "-K", "1", "--float"], "0.5\n0.25\n", monkeypatch)
        assert code == 0
        captured = capsys.readouterr()
        assert "approximate" in captured.err
        report = json.loads(captured.out)
        assert float(report["results"][0]["S"]) == pytest.approx(0.25)

    def test_deterministic_output(self, monkeypatch, capsys):
        run_cli(["moment", "-K", "2", "-K", "4"], "7\n-2\n9\n", monkeypatch)
        first = capsys.readouterr().out
        run_cli(["moment", "-K", "2", "-K", "4"], "7\n-2\n9\n", monkeypatch)
        assert capsys.readouterr().out == first

    def test_schema_shape(self, monkeypatch, capsys):
        run_cli(["moment", "-K", "1"], "4\n", monkeypatch)
        report = json.loads(capsys.readouterr().out)
        assert set(report) == {"N", "results"}
        (row,) = report["results"]
        assert set(row) == {"K", "S", "ops"}
        assert set(row["ops"]) == {"general_mults", "constant_mults", "additions"}
        assert isinstance(row["S"], str)


class TestCoeffs:
    def test_known_values(self, capsys):
        assert cli.main(["coeffs", "-K", "2", "-N", "3"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report == {
            "K": 2,
            "N": 3,
            "coefficients": ["9", "-7", "2"],
            "unique_on_sample_grid": True,
        }

    def test_power_zero(self, capsys):
        assert cli.main(["coeffs", "-K", "0", "-N", "42"]) == 0
        assert json.loads(capsys.readouterr().out)["coefficients"] == ["1"]

    def test_non_uniqueness_flag(self, capsys):
        assert cli.main(["coeffs", "-K", "3", "-N", "2"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["coefficients"] == ["8", "-19", "18", "-6"]
        assert report["unique_on_sample_grid"] is False

    def test_plain_format_with_note(self, capsys):
        assert cli.main(["coeffs", "-K", "3", "-N", "2", "--format", "plain"]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out[0] == "8 -19 18 -6"
        assert "not the unique" in out[1]

    @pytest.mark.parametrize(
        "argv",
        [
            ["coeffs", "-K", "-1", "-N", "3"],
            ["coeffs", "-K", "2", "-N", "0"],
            ["coeffs", "-K", "2"],
        ],
    )
    def test_invalid_arguments(self, argv, capsys):
        assert cli.main(argv) == 2


class TestTable:
    def test_kmax_zero(self, capsys):
        assert cli.main(["table", "--kmax", "0"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[1].split() == ["0", "1"]

    def test_specific_cells(self, capsys):
        assert cli.main(["table", "--kmax", "5"]) == 0
        lines = capsys.readouterr().out.splitlines()
        rows = {cells[0]: cells[1:] for cells in (line.split() for line in lines[1:])}
        assert rows["4"][3] == "-24N-36"
        assert rows["5"][2] == "20N^3+60N^2+70N+30"

    def test_header_names_columns(self, capsys):
        cli.main(["table", "--kmax", "2"])
        header = capsys.readouterr().out.splitlines()[0].split()
        assert header == ["K", "c_1", "c_2", "c_3"]


class TestComplexity:
    def test_default_matches_reference_comparison(self, capsys):
        assert cli.main(["complexity"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "K,N,method,general_mults,constant_mults,additions"
        cascade_rows = [line for line in lines[1:] if ",cascade," in line]
        assert len(cascade_rows) == 9  # Ks 2,4,7 x Ns 10,100,1000
        constant_mults = {int(row.split(",")[4]) for row in cascade_rows}
        assert constant_mults == {3, 5, 8}

    def test_chain_only_count(self, capsys):
        assert cli.main(["complexity", "--Ks", "7", "--Ns", "1000"]) == 0
        lines = capsys.readouterr().out.splitlines()
        chain_row = next(line for line in lines if "baseline_chain_only" in line)
        assert chain_row == "7,1000,baseline_chain_only,4000,0,999"

    def test_minimal_case(self, capsys):
        assert cli.main(["complexity", "--Ks", "0", "--Ns", "1"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[1] == "0,1,cascade,0,1,0"
        assert lines[2] == "0,1,baseline,0,0,0"

    def test_json_format(self, capsys):
        assert cli.main(["complexity", "--Ks", "2", "--Ns", "10", "--format", "json"]) == 0
        (report,) = json.loads(capsys.readouterr().out)
        assert report["K"] == 2 and report["N"] == 10
        assert report["cascade"]["constant_mults"] == 3

    def test_invalid_lists(self, capsys):
        assert cli.main(["complexity", "--Ks", "-1", "--Ns", "10"]) == 2
        assert cli.main(["complexity", "--Ks", "2", "--Ns", "0"]) == 2
        assert cli.main(["complexity", "--Ks", "2;3", "--Ns", "1"]) == 2


class TestSelfcheck:
    def test_healthy_build_passes(self, capsys):
        assert cli.main(["selfcheck", "--seed", "0"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["all_passed"] is True
        assert {check["name"] for check in report["checks"]} == {
            "cascade_matches_direct_sum",
            "coefficient_paths_agree",
            "power_sum_identity",
            "impulse_response",
            "monomial_expansion",
        }

    def test_same_seed_same_output(self, capsys):
        cli.main(["selfcheck", "--seed", "7"])
        first = capsys.readouterr().out
        cli.main(["selfcheck", "--seed", "7"])
        assert capsys.readouterr().out == first

    def test_corrupted_coefficients_detected(self, monkeypatch, capsys):
        from powsum.coeffs import coefficients_closed

        def corrupted(K, N):
            good = coefficients_closed(K, N)
            broken = list(good.coeffs)
            broken[0] += 1
            return CoefficientSet(K, N, tuple(broken))

        monkeypatch.setattr("powsum.selfcheck.coefficients_closed", corrupted)
        assert cli.main(["selfcheck", "--seed", "0"]) == 1
        report = json.loads(capsys.readouterr().out)
        assert report["all_passed"] is False
        failed = next(check for check in report["checks"] if not check["passed"])
        counterexample = failed["counterexample"]
        assert {"K", "N", "v"} <= set(counterexample)


class TestUsage:
    def test_no_subcommand(self, capsys):
        assert cli.main([]) == 2

    def test_unknown_subcommand(self, capsys):
        assert cli.main(["frobnicate"]) == 2

    def test_help_exits_zero(self, capsys):
        assert cli.main(["--help"]) == 0
