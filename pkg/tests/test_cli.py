"""CLI surface: outputs, exit codes, idempotence."""

import json

import numpy as np
import pytest

from trotterlab import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSimpleCommands:
    def test_metrics_desk_example(self, capsys):
        code, out, _ = run(capsys, "metrics", "--word1", "AABB", "--word2", "BBAA")
        assert code == 0
        assert "dsw=4" in out
        assert "rho1=1 (1.0)" in out
        assert "rho_inf=2 (2.0)" in out
        assert "tau_word1=" in out

    def test_metrics_fraction_rendering(self, capsys):
        code, out, _ = run(capsys, "metrics", "--word1", "ABAB", "--word2", "AABB")
        assert code == 0
        assert "rho1=1/4 (0.25)" in out

    def test_enumerate(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--n", "2")
        assert code == 0
        assert out.splitlines() == ["AABB", "ABAB", "ABBA", "BAAB", "BABA", "BBAA"]

    def test_bounds_desk_case(self, capsys):
        code, out, _ = run(capsys, "bounds", "--n", "2", "--m", "2")
        assert code == 0
        assert "count_far=5" in out
        assert "bound=8" in out
        assert "ratio=5/6" in out
        assert "holds=true" in out

    def test_trotter(self, capsys, matrix_file, e12, e21):
        code, out, _ = run(
            capsys, "trotter", "--a", matrix_file(e12, "a"), "--b", matrix_file(e21, "b"),
            "--n", "64",
        )
        assert code == 0
        assert "error=" in out and "bound=" in out and "holds=true" in out

    def test_bound_sweep(self, capsys, matrix_file, e12, e21):
        code, out, _ = run(
            capsys, "bound-sweep", "--a", matrix_file(e12, "a"), "--b", matrix_file(e21, "b"),
            "--max-n", "16",
        )
        assert code == 0
        assert "step_split_n0=" in out
        assert "step_commute_n0=" in out
        assert "trotter_n0=" in out

    def test_appendix_check(self, capsys):
        code, out, _ = run(capsys, "appendix-check", "--n", "4")
        assert code == 0
        assert "pass=true" in out


class TestFileOutputs:
    def test_concentrate_report(self, capsys, tmp_path, matrix_file, e12, e21):
        out_path = tmp_path / "report.json"
        code, _, _ = run(
            capsys, "concentrate", "--a", matrix_file(e12, "a"), "--b", matrix_file(e21, "b"),
            "--n", "4", "--output", str(out_path),
        )
        assert code == 0
        report = json.loads(out_path.read_text())
        assert report["kind"] == "concentration_report"
        assert 0.0 <= report["proportion_within"] <= 1.0
        assert report["seed"] == 0
        assert report["count_total"] == 70

    def test_idempotent_bytes(self, capsys, tmp_path, matrix_file, e12, e21):
        a, b = matrix_file(e12, "a"), matrix_file(e21, "b")
        paths = [tmp_path / "one.json", tmp_path / "two.json"]
        for path in paths:
            code, _, _ = run(
                capsys, "concentrate", "--a", a, "--b", b, "--n", "5",
                "--mode", "sample", "--count", "200", "--seed", "9",
                "--output", str(path),
            )
            assert code == 0
        assert paths[0].read_bytes() == paths[1].read_bytes()

    def test_cloud_json_and_csv(self, capsys, tmp_path, matrix_file, e12, e21):
        a, b = matrix_file(e12, "a"), matrix_file(e21, "b")
        json_path, csv_path = tmp_path / "c.json", tmp_path / "c.csv"
        code, _, _ = run(capsys, "cloud", "--a", a, "--b", b, "--n", "2",
                         "--output", str(json_path))
        assert code == 0
        cloud = json.loads(json_path.read_text())
        assert len(cloud["points"]) == 6
        assert set(cloud["markers"]) == {
            "exp_of_sum", "ordered_product", "reversed_product", "standard_word",
        }

        code, _, _ = run(capsys, "cloud", "--a", a, "--b", b, "--n", "2",
                         "--format", "csv", "--output", str(csv_path))
        assert code == 0
        lines = csv_path.read_text().splitlines()
        assert lines[0] == "word,re_1_1,im_1_1,re_1_2,im_1_2,re_2_1,im_2_1,re_2_2,im_2_2"
        assert len(lines) == 7

    def test_as_run(self, capsys, tmp_path, matrix_file, e12, e21):
        out_path = tmp_path / "run.json"
        code, _, _ = run(
            capsys, "as-run", "--a", matrix_file(e12, "a"), "--b", matrix_file(e21, "b"),
            "--n-values", "16,32,64", "--seed", "7", "--output", str(out_path),
        )
        assert code == 0
        doc = json.loads(out_path.read_text())
        assert doc["n_values"] == [16, 32, 64]
        assert len(doc["errors"]) == 3
        assert len(doc["bound_curve"]) == 3

    def test_three_matrices(self, capsys, tmp_path, matrix_file, e12, e21, e11):
        out_path = tmp_path / "r3.json"
        code, _, _ = run(
            capsys, "concentrate",
            "--matrix", matrix_file(e12, "m0"),
            "--matrix", matrix_file(e21, "m1"),
            "--matrix", matrix_file(e11, "m2"),
            "--n", "2", "--output", str(out_path),
        )
        assert code == 0
        doc = json.loads(out_path.read_text())
        assert doc["alphabet_size"] == 3
        assert doc["count_total"] == 90
        assert "c_constant" not in doc


class TestErrorPaths:
    def test_unknown_flag(self, capsys):
        code, _, err = run(capsys, "metrics", "--word1", "AB", "--word2", "BA", "--bogus")
        assert code == 1
        assert err.strip() and len(err.strip().splitlines()) == 1

    def test_unknown_command(self, capsys):
        code, _, err = run(capsys, "frobnicate")
        assert code == 1 and err.strip()

    def test_bad_word(self, capsys):
        code, _, err = run(capsys, "metrics", "--word1", "AAB", "--word2", "BAA")
        assert code == 1
        assert "word" in err

    def test_missing_matrix_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "trotter", "--a", str(tmp_path / "no.json"),
                           "--b", str(tmp_path / "no.json"), "--n", "4")
        assert code == 1
        assert "cannot read" in err

    def test_malformed_matrix_json(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        code, _, err = run(capsys, "trotter", "--a", str(bad), "--b", str(bad), "--n", "4")
        assert code == 1
        assert "malformed matrix JSON" in err

    def test_invalid_matrix_shape(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps({"d": 2, "re": [[1, 2, 3], [4, 5, 6]]}))
        code, _, err = run(capsys, "trotter", "--a", str(bad), "--b", str(bad), "--n", "4")
        assert code == 1
        assert "invalid matrix" in err

    def test_cap_exceeded(self, capsys):
        code, _, err = run(capsys, "enumerate", "--n", "14")
        assert code == 1
        assert "cap" in err

    def test_mixed_matrix_flags(self, capsys, matrix_file, e12, e21):
        code, _, err = run(
            capsys, "trotter", "--a", matrix_file(e12, "a"),
            "--matrix", matrix_file(e21, "b"), "--n", "2",
        )
        assert code == 1
        assert "not both" in err

    def test_internal_failure_exit_code(self, capsys, monkeypatch, matrix_file, e12, e21):
        def boom(*args, **kwargs):
            raise np.linalg.LinAlgError("synthetic failure")

        monkeypatch.setattr(cli.experiments, "concentration_experiment", boom)
        code, _, err = run(
            capsys, "concentrate", "--a", matrix_file(e12, "a"),
            "--b", matrix_file(e21, "b"), "--n", "2",
        )
        assert code == 2
        assert "internal numerical failure" in err


class TestHelp:
    @pytest.mark.parametrize(
        "command",
        ["enumerate", "metrics", "bounds", "trotter", "bound-sweep", "concentrate",
         "cloud", "as-run", "appendix-check", "serve"],
    )
    def test_every_subcommand_has_help(self, capsys, command):
        code, out, _ = run(capsys, command, "--help")
        assert code == 0
        assert "--" in out  # flags are listed

    def test_top_level_help(self, capsys):
        code, out, _ = run(capsys, "--help")
        assert code == 0
        assert "enumerate" in out and "serve" in out
