from __future__ import annotations

import json
import subprocess
import sys

import pytest

from bulgarian_solitaire.cli import main, run


def report(argv):
    code, rep, text, _ = run(argv + ["--output", "json"])
    return code, rep, json.loads(text) if text else None


def stable(text):
    d = json.loads(text)
    d.pop("timing")
    return json.dumps(d, sort_keys=True)


class TestOrbits:
    def test_n8(self):
        code, rep, _ = report(["orbits", "--n", "8"])
        assert code == 0
        rows = rep["results"]["orbits"]
        assert sorted(r["size"] for r in rows) == [7, 15]
        assert rep["checks"] == {"sum_equals_partition_count": True}

    def test_n6_and_n1(self):
        _, rep, _ = report(["orbits", "--n", "6"])
        (row,) = rep["results"]["orbits"]
        assert row["size"] == 11 and row["histogram"] == [1, 1, 2, 3, 2, 1, 1]
        _, rep, _ = report(["orbits", "--n", "1"])
        assert [r["size"] for r in rep["results"]["orbits"]] == [1]

    def test_csv_members(self, capsys):
        assert main(["orbits", "--n", "4", "--members", "--output", "csv"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "necklace,partition,level" and len(lines) == 6


class TestLevelGF:
    def test_bw_squared(self):
        _, rep, _ = report(["level-gf", "--necklace", "BW", "--k", "2"])
        assert rep["results"]["coefficients"] == [2, 1, 2, 2]
        assert rep["results"]["polynomial"] == "2 + x + 2x^2 + 2x^3"

    def test_w4_and_bww(self):
        _, rep, _ = report(["level-gf", "--necklace", "W", "--k", "4"])
        assert rep["results"]["coefficients"] == [1, 1, 2, 3, 2, 1, 1]
        _, rep, _ = report(["level-gf", "--necklace", "BWW", "--k", "1"])
        assert rep["results"]["coefficients"] == [3, 1, 1]


class TestLimitGF:
    @pytest.mark.parametrize("w", ["BW", "BBW", "W"])
    def test_catalog_pass(self, w):
        code, rep, _ = report(["limit-gf", "--necklace", w])
        assert code == 0 and rep["checks"]["catalog_match"]

    def test_no_fit_advice(self):
        code, rep, _ = report(["limit-gf", "--necklace", "BWWW", "--depth", "10"])
        assert code == 1 and rep["checks"]["fit_found"] is False
        assert "--depth" in rep["notes"][0]

    def test_uncataloged(self):
        code, rep, _ = report(["limit-gf", "--necklace", "BWBWW"])
        assert code == 0 and "catalog_match" not in rep["checks"]
        assert rep["results"]["den_degree"] <= 5


def test_catalog_check_flags_only_bbww():
    code, rep, _ = report(["catalog-check"])
    assert code == 1
    assert [k for k, v in rep["checks"].items() if not v] == ["BBWW"]
    (bbww,) = [e for e in rep["results"]["entries"] if e["necklace"] == "BBWW"]
    assert bbww["corrected_match"] is True


class TestCoincide:
    @pytest.mark.parametrize("k", [1, 4])
    def test_bw(self, k):
        code, rep, _ = report(["coincide", "--necklace", "BW", "--k", str(k)])
        assert code == 0 and rep["results"]["agreement_depth"] >= k

    def test_bww_informational(self):
        code, rep, _ = report(["coincide", "--necklace", "BWW", "--k", "3"])
        assert code == 0 and rep["checks"] == {}
        assert rep["results"]["agreement_depth"] >= 1


class TestSizes:
    def test_bww(self):
        code, rep, _ = report(["orbit-sizes", "--necklace", "BWW", "--k-max", "5"])
        assert code == 0 and rep["results"]["sizes"] == [5, 25, 125, 625, 3125]

    def test_bw(self):
        code, rep, _ = report(["orbit-sizes", "--necklace", "BW", "--k-max", "5"])
        assert code == 0 and rep["results"]["sizes"] == [2, 7, 26, 97, 362]

    def test_conjecture_reports_only(self):
        code, rep, _ = report(["conjecture", "--necklace", "BBWW", "--k-max", "3"])
        assert code == 0 and rep["checks"] == {}
        assert rep["results"]["partner"] == "BBWW"
        assert all("/" in r or r.isdigit() for r in rep["results"]["ratios"])


class TestContract:
    @pytest.mark.parametrize(
        "argv",
        [
            ["orbits"],
            ["orbits", "--n", "0"],
            ["orbits", "--n", "8", "--necklace", "BW"],
            ["limit-gf", "--necklace", "BWBW"],
            ["limit-gf", "--necklace", "B"],
            ["coincide", "--necklace", "BWBW", "--k", "2"],
            ["level-gf", "--necklace", "BXW", "--k", "2"],
            ["conjecture", "--necklace", "BW", "--k-max", "3"],
            ["orbit-sizes", "--necklace", "BW", "--k-max", "0"],
            ["nonsense"],
        ],
    )
    def test_invalid_input(self, argv, capsys):
        assert main(argv) == 2

    def test_resource_guard(self, capsys):
        assert main(["orbits", "--n", "30", "--max-nodes", "100"]) == 3
        assert "resource limit" in capsys.readouterr().err
        assert main(["limit-gf", "--necklace", "BWWWW", "--max-nodes", "100"]) == 3

    def test_deterministic_json(self):
        a = run(["orbit-sizes", "--necklace", "BBW", "--k-max", "3", "--output", "json"])[2]
        b = run(["orbit-sizes", "--necklace", "BBW", "--k-max", "3", "--output", "json"])[2]
        assert stable(a) == stable(b)
        assert list(json.loads(a)) == sorted(json.loads(a))

    def test_out_file(self, tmp_path, capsys):
        path = tmp_path / "r.json"
        assert main(["orbits", "--n", "7", "--output", "json", "--out", str(path)]) == 0
        assert capsys.readouterr().out == ""
        assert json.loads(path.read_text())["results"]["total"] == 15

    def test_text_output(self, capsys):
        main(["orbit-sizes", "--necklace", "BBW", "--k-max", "2"])
        out = capsys.readouterr().out
        assert "[PASS] k=2" in out and out.rstrip().endswith("PASS")

    def test_module_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "bulgarian_solitaire", "orbits", "--n", "5", "--output", "csv"],
            capture_output=True, text=True, check=False,
        )
        assert proc.returncode == 0
        assert proc.stdout.splitlines()[0] == "necklace,size,cycle_length,histogram"
