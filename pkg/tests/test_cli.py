import csv
import io
import json

import pytest

from kitespec.cli import (
    CACHE_DIR_ENV,
    EXIT_OK,
    EXIT_THEOREM_CONTRADICTED,
    EXIT_USAGE,
    RunConfig,
    main,
)
from kitespec.charpoly import charpoly
from kitespec.enumeration import EnumConstraints, cache_load
from kitespec.graph import make_kite


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestRunConfig:
    def test_defaults(self):
        cfg = RunConfig()
        assert (cfg.tol, cfg.worker_count, cfg.output_format) == (1e-12, 1, "text")

    @pytest.mark.parametrize(
        "kwargs",
        [{"tol": 0.0}, {"tol": -1e-9}, {"worker_count": 0}, {"output_format": "yaml"}],
    )
    def test_validation(self, kwargs):
        with pytest.raises(ValueError):
            RunConfig(**kwargs)


class TestCharpolyCommand:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "charpoly", "kite:3,1")
        assert code == EXIT_OK
        assert out.strip() == "λ⁴ − 4λ² − 2λ + 1"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "charpoly", "kite:3,1")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["coefficients"] == ["1", "-2", "-4", "0", "1"]

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "--format", "csv", "charpoly", "complete:3")
        assert code == EXIT_OK
        rows = list(csv.DictReader(io.StringIO(out)))
        assert [r["coefficient"] for r in rows] == ["-2", "-3", "0", "1"]

    def test_bad_spec_is_usage_error(self, capsys):
        code, _, err = run(capsys, "charpoly", "kite:oops")
        assert code == EXIT_USAGE
        assert "error:" in err


class TestSpectrumAndCospectral:
    def test_spectrum_json(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "spectrum", "complete:3")
        vals = json.loads(out)["eigenvalues"]
        assert vals == pytest.approx([2.0, -1.0, -1.0], abs=1e-9)

    def test_cospectral_pair(self, capsys):
        code, out, _ = run(capsys, "cospectral", "g6:DEo", "path:5")
        assert code == EXIT_OK
        assert out.strip() == "not cospectral"
        code, out, _ = run(capsys, "cospectral", "kite:3,0", "complete:3")
        assert out.strip() == "cospectral"


class TestInvariants:
    def test_kite_panel(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "invariants", "kite:7,2")
        payload = json.loads(out)
        assert code == EXIT_OK
        assert (payload["n"], payload["m"], payload["triangles"]) == (9, 23, 35)
        assert payload["clique_number"] == 7
        assert payload["clique_lower_bound"] == 4
        assert payload["radius_lower_bound"] < payload["spectral_radius"] < payload["radius_upper_bound"]

    def test_plain_graph_panel(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "invariants", "path:4")
        payload = json.loads(out)
        assert payload["connected"] is True
        assert "radius_lower_bound" not in payload


class TestCensusAndVerify:
    def test_census(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "kite-census", "--max-n", "12")
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["all_distinct"] is True

    def test_das_verify_ok(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "das-verify", "--p", "4", "--q", "2")
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["verdict"] == "DAS-confirmed-at-scale"
        assert payload["mates"] == []

    def test_das_verify_evidence_claim(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "das-verify", "--p", "3", "--q", "3")
        payload = json.loads(out)
        assert payload["claim"] == "evidence"

    def test_das_verify_q1_rejected(self, capsys):
        code, _, err = run(capsys, "das-verify", "--p", "4", "--q", "1")
        assert code == EXIT_USAGE

    def test_lemma41_check(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "lemma41-check", "--max-p", "15")
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["violations"] == []


class TestBoundsCommand:
    def test_sandwich(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "bounds", "--p", "5", "--q", "3")
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["sandwich_holds"] is True
        assert payload["lower"] < payload["spectral_radius"] < payload["upper"]

    def test_p_too_small(self, capsys):
        code, _, err = run(capsys, "bounds", "--p", "2")
        assert code == EXIT_USAGE


class TestEnumerateCommand:
    def test_counts(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "enumerate", "--n", "5", "--connected")
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["count"] == 21

    def test_cache_flag(self, capsys, tmp_path):
        code, _, _ = run(
            capsys, "--cache-dir", str(tmp_path), "enumerate", "--n", "4"
        )
        assert code == EXIT_OK
        assert len(cache_load(tmp_path, EnumConstraints(4))) == 11

    def test_cache_env_var(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv(CACHE_DIR_ENV, str(tmp_path))
        run(capsys, "enumerate", "--n", "4", "--connected")
        assert len(cache_load(tmp_path, EnumConstraints(4, connected_only=True))) == 6

    def test_flag_wins_over_env(self, capsys, tmp_path, monkeypatch):
        env_dir = tmp_path / "env"
        flag_dir = tmp_path / "flag"
        monkeypatch.setenv(CACHE_DIR_ENV, str(env_dir))
        run(capsys, "--cache-dir", str(flag_dir), "enumerate", "--n", "3")
        assert (flag_dir / "n3").exists()
        assert not env_dir.exists()

    def test_over_cap_is_usage_error(self, capsys):
        code, _, err = run(capsys, "enumerate", "--n", "15")
        assert code == EXIT_USAGE


class TestUsageContract:
    def test_no_command(self, capsys):
        assert main([]) == EXIT_USAGE

    def test_unknown_command(self, capsys):
        assert main(["frobnicate"]) == EXIT_USAGE

    def test_help_is_ok(self, capsys):
        assert main(["--help"]) == EXIT_OK

    def test_bad_format(self, capsys):
        assert main(["--format", "yaml", "charpoly", "path:3"]) == EXIT_USAGE
