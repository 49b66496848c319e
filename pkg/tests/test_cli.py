"""CLI surface: subcommands, exit codes, campaign runner."""

import json

import pytest

from ybops.cli import main


class TestVerify:
    @pytest.mark.parametrize("family,extra", [
        ("thm1", ["--p", "1", "--q", "3", "--sigma", "1"]),
        ("thm2", ["--p", "2", "--q", "3", "--s", "5", "--sigma", "0"]),
        ("prop1", ["--q", "3", "--sigma", "1"]),
        ("prop2", []),
        ("remark_x", []),
        ("coalgebra_thm1", ["--p", "1", "--q", "2"]),
        ("prop1_coalgebra", ["--q", "2"]),
    ])
    def test_families_pass(self, family, extra):
        assert main(["verify", "--family", family, "--samples", "4"]
                    + extra) == 0

    def test_cubic_carrier(self):
        assert main(["verify", "--family", "thm1", "--eps", "2", "--rho", "5",
                     "--samples", "3"]) == 0

    def test_unknown_family_usage_error(self):
        assert main(["verify", "--family", "bogus"]) == 2


class TestMatrix:
    def test_json_to_file(self, tmp_path):
        out = tmp_path / "m.json"
        assert main(["matrix", "--family", "thm1", "--p", "1", "--q", "2",
                     "--u", "3", "--v", "1", "--sigma", "1",
                     "--format", "json", "--out", str(out)]) == 0
        data = json.loads(out.read_text(encoding="utf-8"))
        assert data["entries"] == [["5", "0", "0", "6"], ["0", "2", "1", "0"],
                                   ["0", "3", "4", "0"], ["0", "0", "0", "-1"]]

    def test_csv_and_latex(self, tmp_path, capsys):
        assert main(["matrix", "--family", "prop2", "--x", "3", "--sigma",
                     "0", "--format", "csv"]) == 0
        assert "3," in capsys.readouterr().out
        assert main(["matrix", "--family", "prop2", "--x", "3", "--sigma",
                     "0", "--format", "latex"]) == 0
        assert "pmatrix" in capsys.readouterr().out


class TestFrt:
    def test_default_sample_passes(self, tmp_path):
        report = tmp_path / "frt.json"
        assert main(["frt", "--p", "1", "--q", "3", "--u", "2", "--v", "1",
                     "--sigma", "0", "--report", str(report)]) == 0
        data = json.loads(report.read_text(encoding="utf-8"))
        assert data["all_members"] and data["uv_symmetric"]
        assert data["entry_span_dim"] == data["relation_span_dim"] == 16
        assert len(data["membership"]) == 16


class TestYbsystemAndCompare:
    def test_ybsystem_passes(self):
        assert main(["ybsystem", "--lam", "3", "--mu", "5", "--sigma",
                     "1"]) == 0

    def test_compare_passes(self):
        assert main(["compare", "--q", "2", "--x", "3", "--y", "5"]) == 0


class TestSearchCommand:
    def test_search_writes_report(self, tmp_path):
        out = tmp_path / "s.json"
        assert main(["--seed", "42", "search", "--restarts", "5", "--out",
                     str(out)]) == 0
        data = json.loads(out.read_text(encoding="utf-8"))
        assert data["seed"] == 42 and len(data["results"]) == 5

    def test_report_deterministic(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        for path in (a, b):
            main(["--seed", "9", "search", "--restarts", "3", "--out",
                  str(path)])
        assert a.read_bytes() == b.read_bytes()


class TestCampaign:
    def _config(self, tmp_path, tasks, seed=0):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"seed": seed, "tasks": tasks}),
                       encoding="utf-8")
        return cfg

    def test_all_pass_exit_zero(self, tmp_path):
        cfg = self._config(tmp_path, [
            {"command": "verify",
             "args": {"family": "thm1", "p": "1", "q": "3", "samples": 3}},
            {"command": "frt", "args": {}},
        ])
        outdir = tmp_path / "out"
        assert main(["campaign", str(cfg), "--outdir", str(outdir)]) == 0
        assert (outdir / "task-000-verify.json").exists()
        assert (outdir / "task-001-frt.json").exists()
        assert (outdir / "campaign-meta.json").exists()

    def test_unexpected_failure_exit_one(self, tmp_path):
        # a compare task at parameters where residuals vanish, but the
        # config expects failure: the mismatch must surface as exit 1
        cfg = self._config(tmp_path, [
            {"command": "compare", "args": {}, "expect": "fail"},
        ])
        assert main(["campaign", str(cfg),
                     "--outdir", str(tmp_path / "o")]) == 1

    def test_bad_config_exit_two(self, tmp_path):
        cfg = tmp_path / "broken.json"
        cfg.write_text("{not json", encoding="utf-8")
        assert main(["campaign", str(cfg),
                     "--outdir", str(tmp_path / "o")]) == 2

    def test_unknown_command_exit_two(self, tmp_path):
        cfg = self._config(tmp_path, [{"command": "bogus"}])
        assert main(["campaign", str(cfg),
                     "--outdir", str(tmp_path / "o")]) == 2

    def test_reports_diffable(self, tmp_path):
        cfg = self._config(tmp_path, [
            {"command": "search", "args": {"restarts": 2}},
        ], seed=4)
        d1, d2 = tmp_path / "r1", tmp_path / "r2"
        for d in (d1, d2):
            assert main(["campaign", str(cfg), "--outdir", str(d)]) == 0
        assert ((d1 / "task-000-search.json").read_bytes()
                == (d2 / "task-000-search.json").read_bytes())


class TestUsage:
    def test_missing_subcommand(self):
        assert main([]) == 2

    def test_env_outdir(self, tmp_path, monkeypatch):
        monkeypatch.setenv("YBOPS_OUTDIR", str(tmp_path / "envout"))
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"tasks": [
            {"command": "compare", "args": {}}]}), encoding="utf-8")
        assert main(["campaign", str(cfg)]) == 0
        assert (tmp_path / "envout" / "task-000-compare.json").exists()
