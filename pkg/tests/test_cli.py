"""Command line contract tests.

Subprocess tests pin the external behavior (exit codes, output bytes,
schema); in-process tests cover row assembly and serialization rules
that are awkward to reach through argv.
"""

import csv
import io
import json
import math
import os
import subprocess
import sys

import pytest

from frachh.cli import (CSV_COLUMNS, RunConfig, UsageError, _fmt_float,
                        _sort_key, _worst_status, main, run_rows)
from frachh.functions import (ConvexityKind, FunctionSpec,
                              builtin_weight_corpus, make_weight)
from frachh.numerics import DomainError

SEED = "271828"  # matches the default corpus seed used in library tests


def run_cli(*args, env_extra=None):
    env = dict(os.environ)
    env.pop("FRACHH_TOL", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run([sys.executable, "-m", "frachh", *args],
                          capture_output=True, text=True, env=env)


class TestExitCodes:
    def test_holds_is_zero(self):
        proc = run_cli("verify", "--thm", "hh-classical", "--f", "sq")
        assert proc.returncode == 0, proc.stderr

    def test_violated_is_one(self):
        # printed power-mean bound genuinely fails on a width-2 interval
        proc = run_cli("verify", "--thm", "bound-2-5", "--f", "quad-rand",
                       "--g", "one", "--a", "1", "--b", "3",
                       "--alpha", "0.5", "--q", "1.5", "--seed", SEED)
        assert proc.returncode == 1
        assert '"status": "Violated"' in proc.stdout

    def test_unknown_theorem_is_three(self):
        proc = run_cli("verify", "--thm", "no-such-thing", "--f", "sq")
        assert proc.returncode == 3
        assert "error:" in proc.stderr

    def test_bad_grid_is_three(self):
        proc = run_cli("corpus", "--alpha-grid=-1,2")
        assert proc.returncode == 3
        assert "positive" in proc.stderr

    def test_empty_grid_is_three(self):
        proc = run_cli("corpus", "--alpha-grid", ",")
        assert proc.returncode == 3

    def test_restricted_alpha_is_three(self):
        proc = run_cli("verify", "--thm", "bound-2-7", "--f", "sq",
                       "--g", "one", "--alpha", "1.5", "--q", "2")
        assert proc.returncode == 3
        assert "restricted to 0 < alpha <= 1" in proc.stderr

    def test_missing_weight_is_three(self):
        proc = run_cli("verify", "--thm", "fejer-classical", "--f", "sq")
        assert proc.returncode == 3
        assert "needs --g" in proc.stderr

    def test_unknown_label_lists_alternatives(self):
        proc = run_cli("verify", "--thm", "hh-classical", "--f", "cube")
        assert proc.returncode == 3
        assert "unknown function 'cube'" in proc.stderr
        assert "sq" in proc.stderr

    def test_bad_tolerance_is_three(self):
        proc = run_cli("verify", "--thm", "hh-classical", "--f", "sq",
                       "--tol", "2.0")
        assert proc.returncode == 3


class TestOutputFormats:
    def test_json_shape(self):
        proc = run_cli("verify", "--thm", "hh-fractional", "--f", "exp",
                       "--alpha", "0.5")
        data = json.loads(proc.stdout)
        assert set(data) == {"config", "rows"}
        assert data["config"]["seed"] == 42
        assert data["config"]["tol"] == 1e-9
        (row,) = data["rows"]
        assert set(row) == set(CSV_COLUMNS) | {"notes"}
        assert row["status"] == "Holds"
        assert row["theorem"] == "hh-fractional"
        assert isinstance(row["notes"], list)

    def test_json_floats_survive_round_trip(self):
        proc = run_cli("verify", "--thm", "fejer-fractional", "--f", "sq",
                       "--g", "parabolic", "--alpha", "0.5", "--seed", SEED)
        (row,) = json.loads(proc.stdout)["rows"]
        assert row["lhs"] == pytest.approx(0.075225277806367505, rel=1e-12)
        assert row["mid"] == pytest.approx(0.093136058236455006, rel=1e-12)
        assert row["rhs"] == pytest.approx(0.15045055561273501, rel=1e-12)

    def test_csv_schema(self):
        proc = run_cli("verify", "--thm", "bound-1-5", "--f", "sq",
                       "--alpha", "0.5", "--format", "csv")
        reader = csv.reader(io.StringIO(proc.stdout))
        header = next(reader)
        assert tuple(header) == CSV_COLUMNS
        (record,) = list(reader)
        row = dict(zip(header, record))
        assert row["status"] == "Holds"
        assert row["mid"] == ""  # bounds carry no sandwich fields
        assert float(row["observed"]) == pytest.approx(2.0 / 15.0, rel=1e-9)

    def test_text_format(self):
        proc = run_cli("verify", "--thm", "hh-classical", "--f", "exp",
                       "--format", "text")
        assert proc.stdout.startswith("Holds")
        assert proc.stdout.strip().endswith(
            "rows=1 holds=1 violated=0 inconclusive=0")

    def test_out_file(self, tmp_path):
        path = tmp_path / "rows.json"
        proc = run_cli("verify", "--thm", "hh-classical", "--f", "sq",
                       "--out", str(path))
        assert proc.returncode == 0
        assert proc.stdout == ""
        data = json.loads(path.read_text())
        assert data["rows"][0]["theorem"] == "hh-classical"

    def test_theorem_flag_alias(self):
        short = run_cli("verify", "--thm", "hh-classical", "--f", "sq")
        long = run_cli("verify", "--theorem", "hh-classical", "--f", "sq")
        assert short.stdout == long.stdout


class TestDeterminism:
    @pytest.mark.parametrize("fmt", ["json", "csv"])
    def test_repeat_runs_are_identical(self, fmt):
        args = ("corpus", "--theorems", "hh-fractional,bound-1-5,lemma-1-6",
                "--alpha-grid", "0.5,1.0", "--format", fmt)
        first = run_cli(*args)
        second = run_cli(*args)
        assert first.returncode == 0
        assert first.stdout == second.stdout

    def test_rows_are_sorted(self):
        proc = run_cli("corpus", "--theorems", "hh-fractional",
                       "--alpha-grid", "1.0,0.25")
        rows = json.loads(proc.stdout)["rows"]
        keys = [(r["theorem"], r["f"], r["alpha"]) for r in rows]
        assert keys == sorted(keys)


class TestEnvironmentTolerance:
    def test_env_sets_tolerance(self):
        proc = run_cli("verify", "--thm", "hh-classical", "--f", "sq",
                       env_extra={"FRACHH_TOL": "1e-6"})
        assert json.loads(proc.stdout)["config"]["tol"] == 1e-6

    def test_flag_overrides_env(self):
        proc = run_cli("verify", "--thm", "hh-classical", "--f", "sq",
                       "--tol", "1e-7", env_extra={"FRACHH_TOL": "1e-6"})
        assert json.loads(proc.stdout)["config"]["tol"] == 1e-7

    def test_unparseable_env_is_three(self):
        proc = run_cli("verify", "--thm", "hh-classical", "--f", "sq",
                       env_extra={"FRACHH_TOL": "tight"})
        assert proc.returncode == 3


class TestSubcommands:
    def test_identity_grid(self):
        proc = run_cli("identity", "--f", "exp", "--alpha-grid", "0.5,1.0")
        rows = json.loads(proc.stdout)["rows"]
        assert [r["theorem"] for r in rows] == ["identity-1-4"] * 2
        assert [r["alpha"] for r in rows] == [0.5, 1.0]

    def test_identity_weighted_when_g_given(self):
        proc = run_cli("identity", "--f", "exp", "--g", "parabolic",
                       "--alpha-grid", "0.5")
        (row,) = json.loads(proc.stdout)["rows"]
        assert row["theorem"] == "identity-2-3"

    def test_sweep_skips_restricted_orders(self):
        proc = run_cli("sweep", "--thm", "bound-2-7", "--f", "sq",
                       "--g", "one", "--alpha-grid", "0.5,1.0,2.0",
                       "--q-grid", "2.0")
        rows = json.loads(proc.stdout)["rows"]
        assert [r["alpha"] for r in rows] == [0.5, 1.0]

    def test_sweep_alpha_free_theorem_emits_one_row(self):
        proc = run_cli("sweep", "--thm", "hh-classical", "--f", "sq")
        assert len(json.loads(proc.stdout)["rows"]) == 1

    def test_corpus_rejects_unknown_theorems(self):
        proc = run_cli("corpus", "--theorems", "hh-classical,flux")
        assert proc.returncode == 3
        assert "flux" in proc.stderr

    def test_aux_rows_come_in_pairs(self):
        proc = run_cli("verify", "--thm", "aux-integrals", "--alpha", "0.5")
        rows = json.loads(proc.stdout)["rows"]
        assert [r["f"] for r in rows] == ["e-part", "f-part"]
        assert rows[0]["lhs"] == pytest.approx(0.16429773960448416, rel=1e-12)

    def test_lemma_2_1_row(self):
        proc = run_cli("verify", "--thm", "lemma-2-1", "--g", "parabolic",
                       "--alpha", "0.5", "--seed", SEED)
        (row,) = json.loads(proc.stdout)["rows"]
        assert row["status"] == "Holds"
        assert row["lhs"] == pytest.approx(0.15045055561273502, rel=1e-10)
        assert row["lhs"] == pytest.approx(row["rhs"], rel=1e-9)

    def test_lemma_1_6_uses_interval_arguments(self):
        proc = run_cli("verify", "--thm", "lemma-1-6", "--a", "0.25",
                       "--b", "1", "--alpha", "0.5")
        (row,) = json.loads(proc.stdout)["rows"]
        assert row["observed"] == pytest.approx(0.5, rel=1e-12)
        assert row["bound"] == pytest.approx(0.8660254037844386, rel=1e-12)

    def test_strict_paper_rejects_negative_left_endpoint(self):
        proc = run_cli("verify", "--thm", "hh-fractional", "--f", "sq",
                       "--a", "-1", "--b", "1", "--alpha", "0.5",
                       "--strict-paper")
        assert proc.returncode == 3
        assert "strict mode" in proc.stderr


class TestRowAssembly:
    def test_worst_status_precedence(self):
        holds = {"status": "Holds"}
        inc = {"status": "Inconclusive"}
        bad = {"status": "Violated"}
        assert _worst_status([holds, holds]) == 0
        assert _worst_status([holds, inc]) == 2
        assert _worst_status([holds, inc, bad]) == 1
        assert _worst_status([]) == 0

    def test_forced_asymmetric_weight_yields_violated_row(self):
        ramp = make_weight("ramp", lambda x: x, 0.0, 1.0)
        cfg = RunConfig(force=True)
        rows = run_rows("fejer-fractional", cfg,
                        f=FunctionSpec("exp", math.exp, math.exp,
                                       ConvexityKind.ANALYTIC_DERIV_CONVEX,
                                       0.0, 1.0),
                        g=ramp, alpha=1.0)
        assert _worst_status(rows) == 1
        assert any("hypotheses unmet" in n for n in rows[0]["notes"])

    def test_affine_function_yields_inconclusive_row(self):
        affine = FunctionSpec("affine", lambda x: x, lambda x: 1.0,
                              ConvexityKind.ANALYTIC_DERIV_CONVEX, 0.0, 1.0)
        rows = run_rows("hh-fractional", RunConfig(), f=affine, alpha=0.5)
        assert _worst_status(rows) == 2
        assert "retried at tol/100" in rows[0]["notes"]

    def test_p_alone_determines_conjugate_q(self):
        f = FunctionSpec("sq", lambda x: x * x, lambda x: 2.0 * x,
                         ConvexityKind.ANALYTIC_DERIV_CONVEX, 0.0, 1.0)
        one = builtin_weight_corpus(0.0, 1.0)[0]
        rows = run_rows("bound-2-5", RunConfig(), f=f, g=one, alpha=0.5,
                        p=3.0)
        assert rows[0]["q"] == pytest.approx(1.5)

    def test_missing_requirements_raise_usage_errors(self):
        with pytest.raises(UsageError):
            run_rows("hh-classical", RunConfig())
        with pytest.raises(UsageError):
            run_rows("bound-2-5", RunConfig(),
                     f=FunctionSpec("sq", lambda x: x * x, lambda x: 2.0 * x,
                                    ConvexityKind.ANALYTIC_DERIV_CONVEX,
                                    0.0, 1.0),
                     g=builtin_weight_corpus(0.0, 1.0)[0], alpha=0.5)

    def test_strict_setting_propagates(self):
        cfg = RunConfig(a=-1.0, b=1.0, strict_paper=True)
        with pytest.raises(DomainError):
            cfg.setting(0.5)


class TestSerialization:
    def test_float_format_round_trips(self):
        for x in (0.1, 1.0 / 3.0, 2.0 ** -52, 123456.789, -0.0):
            assert float(_fmt_float(x)) == x

    def test_float_format_rejects_non_finite(self):
        with pytest.raises(ValueError):
            _fmt_float(math.inf)
        with pytest.raises(ValueError):
            _fmt_float(math.nan)

    def test_sort_key_places_missing_fields_first(self):
        with_f = {"theorem": "t", "f": "sq", "g": None, "a": 0.0, "b": 1.0,
                  "alpha": 0.5, "q": None, "p": None}
        without_f = dict(with_f, f=None)
        assert _sort_key(without_f) < _sort_key(with_f)

    def test_main_returns_three_on_usage_error(self, capsys):
        assert main(["verify", "--thm", "hh-classical"]) == 3
        assert "error:" in capsys.readouterr().err
