"""Scenario files, command dispatch, report formats and exit codes."""

import argparse
import json

import pytest

from privopt import ValidationError
from privopt.cli import (
    EXIT_IO,
    EXIT_NUMERIC,
    EXIT_OK,
    EXIT_PARSE,
    EXIT_USAGE,
    EXIT_VALIDATION,
    ReportBundle,
    load_scenario,
    main,
    render_report,
    run_command,
)
from conftest import SCENARIO_DIR

TABLE1 = str(SCENARIO_DIR / "table1.json")
TABLE2 = str(SCENARIO_DIR / "table2.json")


def make_args(**overrides):
    defaults = dict(
        out=None, format="json", grid=None, pmin=None, pmax=None,
        points=None, seed=None, no_timestamp=True, benefit=None, loss=None,
    )
    defaults.update(overrides)
    return argparse.Namespace(**defaults)


def write_scenario(tmp_path, name="scenario.json", **overrides):
    data = json.loads((SCENARIO_DIR / "table2.json").read_text())
    data.update(overrides)
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return str(path)


class TestLoadScenario:
    def test_bundled_table1(self, table1_file):
        s = table1_file.scenario
        assert (s.q_star, s.p_star, s.l_n) == (250.0, 1.0, 10000.0)
        assert s.pi_s == 1e-5
        assert table1_file.digest.startswith("sha256:")

    def test_bundled_table2(self, table2_file):
        s = table2_file.scenario
        assert s.price == 0.5
        assert s.pi_s == 1e-4
        assert table2_file.losses == (1000.0, 3797.0, 8000.0)

    def test_range_violation_names_field(self, tmp_path):
        path = write_scenario(tmp_path, theta=1.5)
        with pytest.raises(ValidationError) as exc:
            load_scenario(path)
        assert exc.value.field == "theta"

    def test_unknown_key_rejected(self, tmp_path):
        path = write_scenario(tmp_path, bogus=1.0)
        with pytest.raises(ValidationError) as exc:
            load_scenario(path)
        assert "bogus" in str(exc.value)

    def test_missing_keys_reported_by_name(self, tmp_path):
        data = json.loads((SCENARIO_DIR / "table2.json").read_text())
        del data["nu"], data["theta"]
        path = tmp_path / "missing.json"
        path.write_text(json.dumps(data))
        with pytest.raises(ValidationError) as exc:
            load_scenario(str(path))
        assert "nu" in str(exc.value) and "theta" in str(exc.value)

    def test_scientific_notation_accepted(self, tmp_path):
        path = write_scenario(tmp_path, pi_s=2.5e-4)
        assert load_scenario(path).scenario.pi_s == 2.5e-4

    def test_tornado_plan_parsing(self, tmp_path):
        path = write_scenario(tmp_path, tornado=[["p_star", -0.1, 0.1], ["nu", 0.1, 0.2]])
        sf = load_scenario(path)
        assert sf.tornado_plan == (("p_star", -0.1, 0.1), ("nu", 0.1, 0.2))

    def test_bad_tornado_factor(self, tmp_path):
        path = write_scenario(tmp_path, tornado=[["frobnicate", -0.1, 0.1]])
        with pytest.raises(ValidationError):
            load_scenario(path)

    def test_non_numeric_blocks_rejected(self, tmp_path):
        path = write_scenario(tmp_path, sweep={"points": "many"})
        with pytest.raises(ValidationError):
            load_scenario(path)
        path = write_scenario(tmp_path, tornado=[["nu", "a", 0.2]])
        with pytest.raises(ValidationError):
            load_scenario(path)

    def test_seed_recorded_in_metadata(self, tmp_path):
        out = tmp_path / "seeded.json"
        assert main(["solve", TABLE2, "--seed", "7", "--no-timestamp", "--out", str(out)]) == EXIT_OK
        assert json.loads(out.read_text())["metadata"]["seed"] == 7


class TestExitCodes:
    def test_solve_ok(self, capsys):
        assert main(["solve", TABLE2]) == EXIT_OK
        out = capsys.readouterr().out
        assert "3796.92" in out
        assert "INTERIOR" in out

    def test_unknown_command_is_usage_error(self, capsys):
        assert main(["frobnicate", TABLE2]) == EXIT_USAGE
        assert "usage" in capsys.readouterr().err.lower()

    def test_no_command_is_usage_error(self):
        assert main([]) == EXIT_USAGE

    def test_parse_error_on_garbage(self, tmp_path, capsys):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        assert main(["solve", str(path)]) == EXIT_PARSE

    def test_parse_error_on_missing_file(self, tmp_path):
        assert main(["solve", str(tmp_path / "absent.json")]) == EXIT_PARSE

    def test_validation_error_names_field(self, tmp_path, capsys):
        path = write_scenario(tmp_path, theta=1.5)
        assert main(["solve", path]) == EXIT_VALIDATION
        assert "theta" in capsys.readouterr().err

    def test_numeric_failure_exit(self, monkeypatch, capsys):
        import privopt.cli as cli_mod

        monkeypatch.setattr(cli_mod, "oracle_grid_argmax", lambda s, n: 0.0)
        assert main(["oracle-check", TABLE2, "--grid", "10000"]) == EXIT_NUMERIC

    def test_unwritable_output(self, tmp_path, capsys):
        target = tmp_path / "no" / "such" / "dir" / "out.json"
        assert main(["solve", TABLE2, "--out", str(target)]) == EXIT_IO

    def test_olr_sweep_on_secure_scenario_is_usage_error(self, tmp_path):
        path = write_scenario(tmp_path, pi_s=0.0)
        assert main(["sweep-olr", path]) == EXIT_USAGE


class TestCommands:
    def test_pareto_nu(self, capsys):
        assert main(["pareto-nu", "--benefit", "0.8", "--loss", "0.2"]) == EXIT_OK
        assert "0.138647" in capsys.readouterr().out

    def test_pareto_nu_requires_flags(self, capsys):
        assert main(["pareto-nu"]) == EXIT_USAGE

    def test_feasibility(self, capsys):
        assert main(["feasibility", TABLE2]) == EXIT_OK
        assert "NU_LT_1" in capsys.readouterr().out

    def test_solve_discrete_uses_losses_block(self, capsys):
        assert main(["solve-discrete", TABLE2]) == EXIT_OK
        out = capsys.readouterr().out
        assert "chosen index      1" in out

    def test_solve_discrete_without_losses(self, tmp_path, capsys):
        data = json.loads((SCENARIO_DIR / "table2.json").read_text())
        del data["losses"]
        path = tmp_path / "nolosses.json"
        path.write_text(json.dumps(data))
        assert main(["solve-discrete", str(path)]) == EXIT_VALIDATION

    def test_oracle_check_agrees(self, capsys):
        assert main(["oracle-check", TABLE2, "--grid", "200000"]) == EXIT_OK
        assert "agreement         yes" in capsys.readouterr().out

    def test_secure_reports_olr(self, capsys):
        assert main(["secure", TABLE2]) == EXIT_OK
        out = capsys.readouterr().out
        assert "olr" in out
        assert "2.00433" in out

    def test_tornado_prints_largest_first(self, capsys):
        assert main(["tornado", TABLE2]) == EXIT_OK
        lines = [ln for ln in capsys.readouterr().out.splitlines() if ln and not ln.startswith("(")]
        assert lines[0].split()[0] in ("pi_s", "pi_c_star")

    def test_sweep_flags_override_grid(self, capsys):
        assert main(["sweep-price", TABLE2, "--pmin", "0.3", "--pmax", "0.6", "--points", "7"]) == EXIT_OK
        assert "points            7" in capsys.readouterr().out


class TestReports:
    def test_json_round_trip(self, table2_file):
        import io

        bundle = run_command("solve", table2_file, make_args(), out=io.StringIO())
        payload = json.loads(json.dumps(bundle.to_dict(), sort_keys=True))
        assert ReportBundle.from_dict(payload) == bundle

    def test_sweep_round_trip(self, table1_file):
        import io

        bundle = run_command("sweep-olr", table1_file, make_args(points=31), out=io.StringIO())
        payload = json.loads(json.dumps(bundle.to_dict(), sort_keys=True))
        assert ReportBundle.from_dict(payload) == bundle

    def test_determinism_byte_identical(self, tmp_path):
        out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
        assert main(["sweep-price", TABLE1, "--points", "21", "--no-timestamp", "--out", str(out1)]) == EXIT_OK
        assert main(["sweep-price", TABLE1, "--points", "21", "--no-timestamp", "--out", str(out2)]) == EXIT_OK
        assert out1.read_bytes() == out2.read_bytes()

    def test_timestamp_present_unless_suppressed(self, tmp_path):
        out = tmp_path / "r.json"
        assert main(["solve", TABLE2, "--out", str(out)]) == EXIT_OK
        assert json.loads(out.read_text())["metadata"]["timestamp"] is not None
        assert main(["solve", TABLE2, "--no-timestamp", "--out", str(out)]) == EXIT_OK
        assert json.loads(out.read_text())["metadata"]["timestamp"] is None

    def test_sweep_csv_schema_and_monotone_column(self, tmp_path):
        out = tmp_path / "sweep.csv"
        code = main(["sweep-price", TABLE1, "--format", "csv", "--no-timestamp", "--out", str(out)])
        assert code == EXIT_OK
        lines = out.read_text().strip().splitlines()
        assert lines[0] == "factor,value,l_opt,revenue,olr,status"
        l_opt = [float(row.split(",")[2]) for row in lines[1:]]
        assert all(b <= a + 1e-9 for a, b in zip(l_opt, l_opt[1:]))
        statuses = {row.split(",")[5] for row in lines[1:]}
        assert statuses == {"CLAMPED_AT_LN", "INTERIOR"}

    def test_tornado_csv_sorted_by_magnitude(self, tmp_path):
        out = tmp_path / "tornado.csv"
        assert main(["tornado", TABLE2, "--format", "csv", "--no-timestamp", "--out", str(out)]) == EXIT_OK
        rows = out.read_text().strip().splitlines()
        assert rows[0] == "factor,kind,delta,value,mixed_status"
        values = [abs(float(r.split(",")[3])) for r in rows[1:]]
        pair_peaks = [max(values[i], values[i + 1]) for i in range(0, len(values), 2)]
        assert pair_peaks == sorted(pair_peaks, reverse=True)

    def test_solve_csv_is_key_value(self, table2_file):
        import io

        bundle = run_command("solve", table2_file, make_args(format="csv"), out=io.StringIO())
        text = render_report(bundle, "csv")
        lines = text.strip().splitlines()
        assert lines[0] == "key,value"
        keys = {ln.split(",")[0] for ln in lines[1:]}
        assert {"l_opt", "status", "surplus", "regime"} <= keys

    def test_json_mirrors_solution_fields(self, tmp_path):
        out = tmp_path / "solve.json"
        assert main(["solve", TABLE2, "--no-timestamp", "--out", str(out)]) == EXIT_OK
        doc = json.loads(out.read_text())
        assert doc["solution"]["status"] == "INTERIOR"
        assert doc["solution"]["l_opt"] == pytest.approx(3796.918, abs=0.01)
        assert doc["metadata"]["input_digest"].startswith("sha256:")
        assert doc["command"] == "solve"
