import json

import pytest

import severi_lattice.severi
from severi_lattice.cli import main


def write_json(path, data):
    path.write_text(json.dumps(data), encoding="utf-8")
    return str(path)


@pytest.fixture
def d3_file(tmp_path):
    return write_json(tmp_path / "d3.json", {"vertices": [[0, 0], [3, 0], [0, 3]]})


@pytest.fixture
def d2_file(tmp_path):
    return write_json(tmp_path / "d2.json", {"vertices": [[0, 0], [2, 0], [0, 2]]})


@pytest.fixture
def diamond2_file(tmp_path):
    return write_json(
        tmp_path / "dia2.json", {"vertices": [[2, 0], [0, 2], [-2, 0], [0, -2]]}
    )


@pytest.fixture
def square_file(tmp_path):
    return write_json(
        tmp_path / "sq.json", {"vertices": [[0, 0], [1, 0], [1, 1], [0, 1]]}
    )


class TestAnalyze:
    def test_d3(self, d3_file, capsys):
        assert main(["analyze", d3_file]) == 0
        out = capsys.readouterr()
        doc = json.loads(out.out)
        assert doc["component_count"] == 1
        assert out.err == ""

    def test_d2(self, d2_file, capsys):
        assert main(["analyze", d2_file]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["component_count"] == 0
        assert doc["interior_classification_m0"] == "TWICE_PRIMITIVE_TRIANGLE"

    def test_deterministic_bytes(self, diamond2_file, capsys):
        assert main(["analyze", diamond2_file]) == 0
        first = capsys.readouterr().out
        assert main(["analyze", diamond2_file]) == 0
        second = capsys.readouterr().out
        assert first == second

    def test_pretty_flag(self, d3_file, capsys):
        assert main(["analyze", "--pretty", d3_file]) == 0
        out = capsys.readouterr().out
        assert out.startswith("{\n")

    def test_invalid_polygon(self, tmp_path, capsys):
        bad = write_json(
            tmp_path / "bad.json",
            {"vertices": [[0, 0], [3, 0], [1, 1], [0, 3]]},  # non-convex
        )
        assert main(["analyze", bad]) == 1
        out = capsys.readouterr()
        assert out.out == ""
        assert "error" in out.err

    def test_missing_file(self, capsys):
        assert main(["analyze", "/nonexistent/poly.json"]) == 1
        assert "error" in capsys.readouterr().err

    def test_garbage_json(self, tmp_path, capsys):
        path = tmp_path / "garbage.json"
        path.write_text("{not json", encoding="utf-8")
        assert main(["analyze", str(path)]) == 1
        assert "error" in capsys.readouterr().err


class TestCount:
    def test_values(self, d3_file, square_file, diamond2_file, capsys):
        assert main(["count", d3_file]) == 0
        assert capsys.readouterr().out.strip() == "1"
        assert main(["count", square_file]) == 0
        assert capsys.readouterr().out.strip() == "0"
        assert main(["count", "--oracle", diamond2_file]) == 0
        assert capsys.readouterr().out.strip() == "2"


class TestComponents:
    def test_diamond(self, diamond2_file, capsys):
        assert main(["components", diamond2_file]) == 0
        comps = json.loads(capsys.readouterr().out)
        assert [c["d"] for c in comps] == [1, 2]
        assert all(c["contributes"] for c in comps)


class TestMatrixCommands:
    def test_snf_identity(self, tmp_path, capsys):
        path = write_json(
            tmp_path / "id.json",
            {"rows": 2, "cols": 2, "entries": [[1, 0], [0, 1]]},
        )
        assert main(["snf", path]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["D"]["entries"] == [[1, 0], [0, 1]]
        assert doc["Q"]["entries"] == [[1, 0], [0, 1]]
        assert doc["P"]["entries"] == [[1, 0], [0, 1]]

    def test_snf_example(self, tmp_path, capsys):
        path = write_json(
            tmp_path / "m.json",
            {"rows": 2, "cols": 2, "entries": [[2, 4], [6, 8]]},
        )
        assert main(["snf", path]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["D"]["entries"] == [[2, 0], [0, 4]]

    def test_hsnf_rejects_bad_row_sums(self, tmp_path, capsys):
        path = write_json(
            tmp_path / "m.json",
            {"rows": 1, "cols": 2, "entries": [[1, 1]]},
        )
        assert main(["hsnf", path]) == 1
        assert "error" in capsys.readouterr().err

    def test_hsnf(self, tmp_path, capsys):
        path = write_json(
            tmp_path / "m.json",
            {"rows": 1, "cols": 2, "entries": [[1, -1]]},
        )
        assert main(["hsnf", path]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["A"]["entries"] == [[-1, 1]]


class TestCorpusCommand:
    def test_unit_box_lines(self, capsys):
        assert main(["corpus", "--max-coord", "1"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 5
        for line in lines:
            assert "vertices" in json.loads(line)

    def test_limit(self, capsys):
        assert main(["corpus", "--max-coord", "2", "--limit", "10"]) == 0
        assert len(capsys.readouterr().out.strip().splitlines()) == 10

    def test_bound_enforced(self, capsys):
        assert main(["corpus", "--max-coord", "7"]) == 1
        assert "error" in capsys.readouterr().err

    def test_out_dir(self, tmp_path, capsys):
        out = tmp_path / "corpus"
        assert main(["corpus", "--max-coord", "1", "--out", str(out)]) == 0
        files = sorted(out.glob("polygon_*.json"))
        assert len(files) == 5
        json.loads(files[0].read_text(encoding="utf-8"))


class TestVerifyCommand:
    def test_small_run_passes(self, capsys):
        assert main(["verify", "--max-coord", "1", "--trials", "3", "--seed", "1"]) == 0
        out = capsys.readouterr().out
        assert "ALL CHECKS PASSED" in out

    def test_injected_fault_detected(self, capsys, monkeypatch):
        # harness sanity: a broken count must flip the exit code to 2
        monkeypatch.setattr(
            severi_lattice.severi, "count_components", lambda poly: 99
        )
        code = main(["verify", "--max-coord", "1", "--trials", "2", "--seed", "1"])
        assert code == 2
        out = capsys.readouterr().out
        assert "FAILURES DETECTED" in out
