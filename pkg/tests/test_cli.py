import json
import subprocess
import sys


def run_cli(*args, cwd, env_extra=None):
    import os

    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "nestfock", *args],
        capture_output=True,
        text=True,
        cwd=cwd,
        env=env,
    )


class TestTransition:
    def test_degree_one_rows(self, tmp_path):
        res = run_cli(
            "transition", "--from", "b2", "--to", "b1", "--degree", "1", cwd=tmp_path
        )
        assert res.returncode == 0, res.stderr
        doc = json.loads(res.stdout)
        assert doc["source"] == "b2" and doc["target"] == "b1" and doc["n"] == 1
        assert doc["key_order"]["rows"] == [{"i": 1, "nu": []}, {"i": 0, "nu": [1]}]
        assert doc["rows"] == [["1/2", "-1/2"], ["1/2", "1/2"]]

    def test_b3_to_b2_degree_zero(self, tmp_path):
        res = run_cli(
            "transition", "--from", "b3", "--to", "b2", "--degree", "0", cwd=tmp_path
        )
        assert json.loads(res.stdout)["rows"] == [["1"]]

    def test_identity(self, tmp_path):
        res = run_cli(
            "transition", "--from", "b1", "--to", "b1", "--degree", "3", cwd=tmp_path
        )
        doc = json.loads(res.stdout)
        dim = len(doc["key_order"]["rows"])
        for i, row in enumerate(doc["rows"]):
            assert row == ["1" if j == i else "0" for j in range(dim)]

    def test_invalid_basis_is_usage_error(self, tmp_path):
        res = run_cli(
            "transition", "--from", "b9", "--to", "b1", "--degree", "1", cwd=tmp_path
        )
        assert res.returncode == 2

    def test_degree_above_max_is_usage_error(self, tmp_path):
        res = run_cli(
            "transition",
            "--from", "b2", "--to", "b1", "--degree", "5", "--max-degree", "4",
            cwd=tmp_path,
        )
        assert res.returncode == 2

    def test_csv_format(self, tmp_path):
        res = run_cli(
            "transition",
            "--from", "b2", "--to", "b1", "--degree", "1", "--format", "csv",
            cwd=tmp_path,
        )
        lines = res.stdout.splitlines()
        assert lines[0].startswith("key,")
        assert len(lines) == 3 and "1/2" in lines[1]


class TestDeterminismAndCache:
    def test_repeated_runs_byte_identical(self, tmp_path):
        args = ("transition", "--from", "b2", "--to", "b1", "--degree", "3")
        first = run_cli(*args, cwd=tmp_path)
        second = run_cli(*args, cwd=tmp_path)
        assert first.stdout == second.stdout and first.returncode == second.returncode == 0

    def test_cold_and_warm_cache_agree(self, tmp_path):
        args = ("transition", "--from", "b2", "--to", "b1", "--degree", "2")
        cold = run_cli(*args, cwd=tmp_path)
        cache_file = tmp_path / ".nestfock-cache" / "b2--b1--2.json"
        assert cache_file.exists()
        warm = run_cli(*args, cwd=tmp_path)
        assert cold.stdout == warm.stdout

    def test_cache_dir_flag_and_env(self, tmp_path):
        flag_dir = tmp_path / "flagcache"
        run_cli(
            "transition",
            "--from", "b2", "--to", "b1", "--degree", "1",
            "--cache-dir", str(flag_dir),
            cwd=tmp_path,
        )
        assert (flag_dir / "b2--b1--1.json").exists()
        env_dir = tmp_path / "envcache"
        run_cli(
            "transition", "--from", "b2", "--to", "b1", "--degree", "1",
            cwd=tmp_path,
            env_extra={"NESTFOCK_CACHE_DIR": str(env_dir)},
        )
        assert (env_dir / "b2--b1--1.json").exists()
        # the flag wins over the environment
        both_dir = tmp_path / "bothcache"
        run_cli(
            "transition", "--from", "b2", "--to", "b1", "--degree", "1",
            "--cache-dir", str(both_dir),
            cwd=tmp_path,
            env_extra={"NESTFOCK_CACHE_DIR": str(env_dir / "ignored")},
        )
        assert (both_dir / "b2--b1--1.json").exists()

    def test_corrupted_cache_is_loud(self, tmp_path):
        args = ("transition", "--from", "b2", "--to", "b1", "--degree", "1")
        run_cli(*args, cwd=tmp_path)
        cache_file = tmp_path / ".nestfock-cache" / "b2--b1--1.json"
        doc = json.loads(cache_file.read_text())
        doc["rows"][0][0] = "9"
        cache_file.write_text(json.dumps(doc))
        res = run_cli(*args, cwd=tmp_path)
        assert res.returncode == 1 and "checksum" in res.stderr

    def test_stale_version_recomputed(self, tmp_path):
        args = ("transition", "--from", "b2", "--to", "b1", "--degree", "1")
        fresh = run_cli(*args, cwd=tmp_path)
        cache_file = tmp_path / ".nestfock-cache" / "b2--b1--1.json"
        doc = json.loads(cache_file.read_text())
        doc["version"] = "0.0.0"
        cache_file.write_text(json.dumps(doc))
        again = run_cli(*args, cwd=tmp_path)
        assert again.returncode == 0 and again.stdout == fresh.stdout


class TestProduct:
    def test_b1_degree_one_diagonal(self, tmp_path):
        res = run_cli("product", "--basis", "b1", "--degree", "1", cwd=tmp_path)
        doc = json.loads(res.stdout)
        assert doc["basis"] == "b1" and doc["degree"] == 1
        diag = [t for t in doc["triples"] if t["a"] == t["b"] == t["c"]]
        assert [t["coeff"] for t in diag] == ["2", "2"]
        assert len(doc["triples"]) == 2

    def test_b2_single_product(self, tmp_path):
        res = run_cli(
            "product",
            "--basis", "b2", "--degree", "1",
            "--a", '{"i": 0, "nu": [1]}', "--b", '{"i": 0, "nu": [1]}',
            cwd=tmp_path,
        )
        doc = json.loads(res.stdout)
        assert doc["triples"] == [
            {"a": {"i": 0, "nu": [1]}, "b": {"i": 0, "nu": [1]}, "c": {"i": 0, "nu": [1]}, "coeff": "1"}
        ]

    def test_ordinary_unit_law_table(self, tmp_path):
        res = run_cli("product", "--basis", "ordinary", "--degree", "1", cwd=tmp_path)
        doc = json.loads(res.stdout)
        unit = {"i": 0, "nu": [1]}
        top = {"i": 1, "nu": []}
        triples = {
            (json.dumps(t["a"]), json.dumps(t["b"]), json.dumps(t["c"])): t["coeff"]
            for t in doc["triples"]
        }
        j = json.dumps
        assert triples[(j(unit), j(unit), j(unit))] == "1"
        assert triples[(j(unit), j(top), j(top))] == "1"
        assert triples[(j(top), j(unit), j(top))] == "1"
        assert (j(top), j(top), j(top)) not in triples

    def test_bad_key_is_usage_error(self, tmp_path):
        res = run_cli(
            "product", "--basis", "b2", "--degree", "1", "--a", '{"i": 5, "nu": []}',
            cwd=tmp_path,
        )
        assert res.returncode == 2


class TestBettiAndPairs:
    def test_betti(self, tmp_path):
        res = run_cli("betti", "--max-n", "2", cwd=tmp_path)
        assert json.loads(res.stdout) == [[1], [1, 1], [1, 2, 1]]

    def test_pairs(self, tmp_path):
        res = run_cli("pairs", "--degree", "2", cwd=tmp_path)
        assert json.loads(res.stdout) == [
            {"lambda": [2], "mu": [3]},
            {"lambda": [2], "mu": [2, 1]},
            {"lambda": [1, 1], "mu": [2, 1]},
            {"lambda": [1, 1], "mu": [1, 1, 1]},
        ]


class TestVerify:
    def test_passing_suite(self, tmp_path):
        res = run_cli("verify", "--suite", "hooks", "--max-n", "5", cwd=tmp_path)
        assert res.returncode == 0
        assert "ok" in res.stdout and "FAIL" not in res.stdout

    def test_unknown_suite_rejected(self, tmp_path):
        res = run_cli("verify", "--suite", "nonsense", cwd=tmp_path)
        assert res.returncode == 2
