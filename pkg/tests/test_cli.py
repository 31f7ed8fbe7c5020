"""Command-line behavior: values, formats, exit codes, determinism."""

from __future__ import annotations

import json

import pytest

from thetacalc import cli
from thetacalc.exactnum import HypothesisError


def run_cli(capsys, *argv):
    code = cli.run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestWorkedExamples:
    def test_dim_prints_bare_value_in_plain_format(self, capsys):
        code, out, _ = run_cli(capsys, "dim", "--genus", "2", "--rank", "2", "--level", "1")
        assert code == 0
        assert out == "4\n"

    def test_v_value(self, capsys):
        code, out, _ = run_cli(capsys, "v", "--genus", "2", "--rank", "2", "--level", "1")
        assert code == 0
        assert out == "9\n"

    def test_symbol_value(self, capsys):
        code, out, _ = run_cli(capsys, "symbol", "--lam", "3", "--h", "3", "--genus", "1")
        assert code == 0
        assert out == "8/9\n"

    def test_trace_value(self, capsys):
        code, out, _ = run_cli(
            capsys, "trace", "--genus", "2", "--rank", "1", "--level", "1",
            "--h", "3", "--order", "3",
        )
        assert code == 0
        assert out == "4\n"

    def test_split_table_lists_multiplicities_and_total_rank(self, capsys):
        code, out, _ = run_cli(
            capsys, "split", "--genus", "1", "--rank", "1", "--level", "1", "--h", "3",
        )
        assert code == 0
        lines = out.splitlines()
        assert "omega=1 characters=1 multiplicity=2 rank_part=2" in lines
        assert "omega=3 characters=8 multiplicity=1 rank_part=8" in lines
        assert lines[-1].endswith("rank_part=10")

    def test_pgl_reports_both_routes_and_agreement(self, capsys):
        code, out, _ = run_cli(
            capsys, "pgl", "--genus", "1", "--rank", "3", "--level", "3", "--d", "3",
        )
        assert code == 0
        assert out == "charsum=2 coperiodic=2 agree=true\n"

    def test_fm_reports_transformed_rank_and_slope(self, capsys):
        code, out, _ = run_cli(capsys, "fm", "--genus", "2", "--rank", "3", "--slope", "5/3")
        assert code == 0
        assert out == "rank=25/3 slope=-3/5\n"

    def test_census_rows(self, capsys):
        code, out, _ = run_cli(capsys, "heisenberg", "census", "--m", "3", "--genus", "1")
        assert code == 0
        assert out.splitlines() == [
            "dimension=1 weight=0 count=9",
            "dimension=3 weight=1 count=1",
            "dimension=3 weight=2 count=1",
        ]


class TestFormats:
    def test_json_carries_params_and_exact_result(self, capsys):
        _, out, _ = run_cli(
            capsys, "dim", "--genus", "2", "--rank", "2", "--level", "1",
            "--format", "json",
        )
        payload = json.loads(out)
        assert payload["result"] == "4"
        assert payload["params"] == {"genus": "2", "rank": "2", "level": "1"}
        assert payload["mode"] == "exact"

    def test_all_formats_carry_the_same_exact_value(self, capsys):
        query = ["symbol", "--lam", "1", "--h", "3", "--genus", "1"]
        values = {}
        for fmt in ("plain", "json", "csv", "latex"):
            _, out, _ = run_cli(capsys, *query, "--format", fmt)
            values[fmt] = out
        assert values["plain"] == "-1/9\n"
        assert json.loads(values["json"])["result"] == "-1/9"
        assert "-1/9" in values["csv"].splitlines()[1]
        assert "-1/9" in values["latex"]

    def test_table_formats_agree_on_rows(self, capsys):
        query = ["heisenberg", "census", "--m", "3", "--genus", "1"]
        _, out_json, _ = run_cli(capsys, *query, "--format", "json")
        _, out_csv, _ = run_cli(capsys, *query, "--format", "csv")
        rows = json.loads(out_json)["rows"]
        assert rows[0] == {"dimension": "1", "weight": "0", "count": "9"}
        assert out_csv.splitlines()[1] == "3,1,1,0,9,exact"

    def test_float_mode_renders_decimal_exact_mode_never_does(self, capsys):
        _, exact, _ = run_cli(capsys, "symbol", "--lam", "3", "--h", "9", "--genus", "1")
        _, approx, _ = run_cli(
            capsys, "symbol", "--lam", "3", "--h", "9", "--genus", "1",
            "--mode", "float",
        )
        assert exact == "-1/9\n"
        assert approx.startswith("-0.1111111")

    def test_float_mode_on_v_uses_the_numeric_evaluator(self, capsys):
        _, out, _ = run_cli(
            capsys, "v", "--genus", "2", "--rank", "2", "--level", "1",
            "--mode", "float",
        )
        assert out == "9.0\n"


class TestExitCodes:
    def test_hypothesis_violation_exits_1(self, capsys):
        code, out, err = run_cli(
            capsys, "split", "--genus", "1", "--rank", "1", "--level", "1", "--h", "4",
        )
        assert code == 1
        assert out == ""
        assert "hypothesis violated" in err
        assert "odd" in err

    def test_noncoprime_split_exits_1(self, capsys):
        code, _, err = run_cli(
            capsys, "split", "--genus", "1", "--rank", "2", "--level", "2", "--h", "3",
        )
        assert code == 1
        assert "gcd" in err

    def test_unknown_command_exits_3(self, capsys):
        assert run_cli(capsys, "bogus")[0] == 3

    def test_missing_required_flag_exits_3(self, capsys):
        assert run_cli(capsys, "dim", "--genus", "2")[0] == 3

    def test_help_exits_0(self, capsys):
        assert run_cli(capsys, "--help")[0] == 0

    def test_unreadable_range_spec_exits_3(self, capsys):
        code, _, err = run_cli(capsys, "identities", "--range-spec", "/nonexistent/file")
        assert code == 3
        assert "usage error" in err

    def test_unknown_range_spec_key_exits_3(self, capsys, tmp_path):
        path = tmp_path / "range.txt"
        path.write_text("bogus_key=3\n")
        code, _, err = run_cli(capsys, "identities", "--range-spec", str(path))
        assert code == 3
        assert "bogus_key" in err

    def test_timing_goes_to_stderr_not_stdout(self, capsys):
        _, out, err = run_cli(capsys, "dim", "--genus", "1", "--rank", "1", "--level", "1")
        assert "elapsed_ms" not in out
        assert "elapsed_ms=" in err


class TestIdentities:
    def test_small_range_passes_every_case(self, capsys, tmp_path):
        path = tmp_path / "range.txt"
        path.write_text("g_max=1\nn_max=6\nh_list=1,3\nd_list=1,3\n")
        code, out, _ = run_cli(capsys, "identities", "--range-spec", str(path))
        assert code == 0
        lines = out.splitlines()
        assert all(line.startswith("ok ") for line in lines[:-1])
        assert lines[-1] == f"passed {len(cli.IDENTITY_CASES)} of {len(cli.IDENTITY_CASES)}"

    def test_thread_count_does_not_change_stdout(self, capsys, tmp_path):
        path = tmp_path / "range.txt"
        path.write_text("g_max=1\nn_max=6\nh_list=1,3\nd_list=1\n")
        _, out_one, _ = run_cli(capsys, "identities", "--range-spec", str(path), "--threads", "1")
        _, out_four, _ = run_cli(capsys, "identities", "--range-spec", str(path), "--threads", "4")
        assert out_one == out_four

    def test_failing_case_is_named_and_exits_2(self, capsys, monkeypatch):
        probe = (("always failing probe", lambda ranges: "probe detail"),)
        monkeypatch.setattr(cli, "IDENTITY_CASES", probe)
        code, out, _ = run_cli(capsys, "identities")
        assert code == 2
        assert "FAIL always failing probe: probe detail" in out
        assert out.splitlines()[-1] == "passed 0 of 1"

    def test_case_raising_hypothesis_error_is_reported_not_fatal(self, capsys, monkeypatch):
        def boom(ranges):
            raise HypothesisError("synthetic violation")

        monkeypatch.setattr(cli, "IDENTITY_CASES", (("raising probe", boom),))
        code, out, _ = run_cli(capsys, "identities")
        assert code == 2
        assert "FAIL raising probe: synthetic violation" in out


class TestRangeSpecParsing:
    def test_comments_and_blanks_are_ignored(self, tmp_path):
        path = tmp_path / "range.txt"
        path.write_text("# comment\n\ng_max=3\nh_list=1, 3, 5\n")
        ranges = cli.parse_range_spec(str(path))
        assert ranges.g_max == 3
        assert ranges.h_list == (1, 3, 5)
        assert ranges.n_max == 8

    def test_malformed_line_raises(self, tmp_path):
        path = tmp_path / "range.txt"
        path.write_text("just words\n")
        with pytest.raises(ValueError, match="key=value"):
            cli.parse_range_spec(str(path))
