"""CLI behaviour: formats, exit codes, cache round-trips, fault injection."""

import json

import pytest

from fockdec.cli import MatrixCache, cached_matrix, main
from fockdec.canonical import DecompositionMatrix, decomposition_matrix
from fockdec.fock import BarMatrix


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out


class TestDecomp:
    def test_json_entry(self, capsys, tmp_path):
        code, out = run(
            ["decomp", "--n", "2", "--m", "2", "--format", "json", "--cache-dir", str(tmp_path)],
            capsys,
        )
        assert code == 0
        data = json.loads(out)
        assert data["entries"][1][0] == "q"
        assert data["order"] == [[2], [1, 1]]

    def test_semisimple_identity(self, capsys, tmp_path):
        code, out = run(
            ["decomp", "--n", "5", "--m", "3", "--format", "json", "--cache-dir", str(tmp_path)],
            capsys,
        )
        data = json.loads(out)
        for i, row in enumerate(data["entries"]):
            for j, entry in enumerate(row):
                assert entry == ("1" if i == j else "0")

    def test_usage_error_exit_2(self, capsys, tmp_path):
        with pytest.raises(SystemExit) as err:
            main(["decomp", "--n", "1", "--m", "2", "--cache-dir", str(tmp_path)])
        assert err.value.code == 2


class TestBar:
    def test_entry_value(self, capsys, tmp_path):
        code, out = run(
            ["bar", "--n", "2", "--m", "2", "--format", "json", "--cache-dir", str(tmp_path)],
            capsys,
        )
        assert code == 0
        data = json.loads(out)
        assert data["entries"][1][0] == "-q^-1 + q"

    def test_m0_scalar(self, capsys, tmp_path):
        code, out = run(
            ["bar", "--n", "3", "--m", "0", "--format", "json", "--cache-dir", str(tmp_path)],
            capsys,
        )
        data = json.loads(out)
        assert data["entries"] == [["1"]]


class TestSchaper:
    def test_column_pair(self, capsys):
        code, out = run(["schaper", "--lambda", "1,1", "--n", "2"], capsys)
        assert code == 0
        assert "S(2)" in out
        assert "nu = 1" in out
        assert "PASS" in out

    def test_single_row(self, capsys):
        code, out = run(["schaper", "--lambda", "2", "--n", "2"], capsys)
        assert code == 0
        assert "nu = 0" in out

    def test_malformed_lambda(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["schaper", "--lambda", "1,x", "--n", "2"])
        assert err.value.code == 2


class TestVerify:
    def test_default_subset_passes(self, capsys):
        code, out = run(
            ["verify", "--max-m", "3", "--n-set", "2,3", "--suite", "involution,theorem1,det-bridge"],
            capsys,
        )
        assert code == 0
        assert "0 failures" in out

    def test_json_report_schema(self, capsys):
        code, out = run(
            ["verify", "--max-m", "2", "--n-set", "2", "--suite", "theorem1", "--format", "json"],
            capsys,
        )
        assert code == 0
        data = json.loads(out)
        assert data
        for item in data:
            assert set(item) == {"lambda", "n", "check", "pass", "lhs", "rhs"}
            assert item["pass"] is True

    def test_empty_range(self, capsys):
        code, out = run(
            ["verify", "--max-m", "0", "--n-set", "2", "--suite", "involution"],
            capsys,
        )
        assert code == 0

    def test_injected_fault_fails(self, capsys):
        code, out = run(
            ["verify", "--max-m", "3", "--n-set", "2", "--suite", "theorem1", "--inject-fault"],
            capsys,
        )
        assert code == 1
        assert "FAIL theorem1" in out

    def test_unknown_suite(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["verify", "--suite", "nonsense"])
        assert err.value.code == 2


class TestGram:
    def test_column_pair(self, capsys):
        code, out = run(["gram", "--lambda", "1,1", "--n", "2"], capsys)
        assert code == 0
        assert "nu(det)        : 1" in out

    def test_single_row(self, capsys):
        code, out = run(["gram", "--lambda", "2", "--n", "2", "--format", "json"], capsys)
        assert code == 0
        data = json.loads(out)
        assert data["nu"] == 0
        assert data["rank_at_root"] == 1

    def test_size_cap_error(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["gram", "--lambda", "4,2", "--n", "2"])
        assert err.value.code == 2


class TestCache:
    def test_round_trip(self, tmp_path):
        fresh = cached_matrix("decomp", 2, 3, tmp_path)
        assert (tmp_path / "decomp-n2-m3.json").exists()
        reloaded = cached_matrix("decomp", 2, 3, tmp_path)
        assert reloaded == fresh
        assert reloaded == decomposition_matrix(2, 3)

    def test_stale_schema_recomputed(self, tmp_path):
        cached_matrix("bar", 2, 2, tmp_path)
        path = tmp_path / "bar-n2-m2.json"
        payload = json.loads(path.read_text())
        payload["schema"] = "ancient"
        path.write_text(json.dumps(payload))
        cache = MatrixCache(tmp_path)
        assert cache.load("bar", 2, 2, BarMatrix) is None
        matrix = cached_matrix("bar", 2, 2, tmp_path)
        assert json.loads(path.read_text())["schema"] != "ancient"
        assert matrix.entry((1, 1), (2,)) is not None

    def test_corrupt_file_recomputed(self, tmp_path):
        path = tmp_path / "decomp-n2-m2.json"
        path.write_text("{not json")
        matrix = cached_matrix("decomp", 2, 2, tmp_path)
        assert matrix == decomposition_matrix(2, 2)

    def test_env_default(self, monkeypatch, tmp_path):
        from fockdec.cli import default_cache_dir

        monkeypatch.setenv("FOCKDEC_CACHE", str(tmp_path / "envcache"))
        assert default_cache_dir() == tmp_path / "envcache"
        monkeypatch.delenv("FOCKDEC_CACHE")
        assert str(default_cache_dir()) == ".fockdec-cache"
