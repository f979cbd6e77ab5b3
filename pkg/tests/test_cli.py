import csv
import io
import json

import pytest

from maxai.cli import main
from maxai.enumeration import build_item1, build_item2, build_item3, enumerate_all
from maxai.symfun import SymFn, hamming_weight
from golden_n14 import ALL_V7


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestEnumerateCommand:
    def test_text_row_count(self, capsys):
        code, out, _ = run(capsys, "enumerate", "-n", "14")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 57  # header + 56 rows
        assert lines[0].startswith("f\tSVV: v(0)..v(14)")
        listed = {line.split("\t")[1] for line in lines[1:]}
        assert set(ALL_V7) <= listed

    def test_csv_round_trip(self, capsys):
        code, out, _ = run(capsys, "enumerate", "-n", "14", "--format", "csv")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 56
        assert rows[0]["svv"] == "000000001111111"
        rebuilt = []
        for row in rows:
            n = int(row["n"])
            params = tuple(int(c) for c in row["params"])
            if row["case"] == "item1":
                f = build_item1(n, params)
            elif row["case"] == "item2":
                f = build_item2(n, params)
            else:
                triple = tuple(int(c) for c in row["triple"])
                f = build_item3(n, int(row["p0"]), params, triple)
            assert f.to_string() == row["svv"]
            assert hamming_weight(f) == int(row["weight"])
            rebuilt.append(f.to_string())
        assert rebuilt == [r.svv for r in enumerate_all(14)]

    def test_json_round_trip(self, capsys):
        code, out, _ = run(capsys, "enumerate", "-n", "14", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert [d["svv"] for d in data] == [r.svv for r in enumerate_all(14)]
        for d, r in zip(data, enumerate_all(14)):
            assert d["case"] == r.case
            assert d["params"] == "".join(map(str, r.params))
            assert d["p0"] == r.p0
            assert (d["triple"] is None) == (r.triple is None)

    def test_odd_n_rejected(self, capsys):
        code, _, err = run(capsys, "enumerate", "-n", "3")
        assert code == 2
        assert "even" in err

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "records.csv"
        code, out, _ = run(capsys, "enumerate", "-n", "8", "--format", "csv",
                           "--out", str(target))
        assert code == 0 and out == ""
        assert len(target.read_text().splitlines()) == 25


class TestAiCommand:
    def test_catalog_function(self, capsys):
        code, out, _ = run(capsys, "ai", "--svv", "000000011111111")
        assert code == 0
        assert "AI = 7" in out

    def test_majority4(self, capsys):
        code, out, _ = run(capsys, "ai", "--svv", "00011")
        assert code == 0
        assert "AI = 2" in out

    def test_constant(self, capsys):
        code, out, _ = run(capsys, "ai", "--svv", "00000")
        assert code == 0
        assert "AI = 0" in out
        assert "annihilator = 1" in out

    def test_malformed(self, capsys):
        assert run(capsys, "ai", "--svv", "0a1")[0] == 2

    def test_capacity(self, capsys):
        code, _, err = run(capsys, "ai", "--svv", "0" * 19)
        assert code == 3
        assert "capped" in err


class TestClassifyCommand:
    def test_item2(self, capsys):
        code, out, _ = run(capsys, "classify", "--svv", "000000011110111")
        assert code == 0
        assert "case=item2" in out and "weight=9544" in out

    def test_not_max(self, capsys):
        code, out, _ = run(capsys, "classify", "--svv", "000000000000001")
        assert code == 0
        assert out.strip() == "not max-AI"

    def test_odd_rejected(self, capsys):
        assert run(capsys, "classify", "--svv", "0101")[0] == 2


class TestConvertCommand:
    def test_svv_to_sanf(self, capsys):
        assert run(capsys, "convert", "--svv", "001") == (0, "001\n", "")

    def test_round_trip_via_stdin(self, capsys, monkeypatch):
        import random

        rng = random.Random(7)
        for n in (2, 5, 11, 20):
            s = "".join(rng.choice("01") for _ in range(n + 1))
            code, sanf, _ = run(capsys, "convert", "--svv", s)
            assert code == 0
            monkeypatch.setattr("sys.stdin", io.StringIO(sanf))
            code, back, _ = run(capsys, "convert", "--sanf", "-")
            assert code == 0 and back.strip() == s

    def test_requires_one_side(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["convert"])
        assert exc.value.code == 2


class TestSetsCommand:
    def test_n14(self, capsys):
        code, out, _ = run(capsys, "sets", "-n", "14")
        assert code == 0
        assert "A_0 = {7}" in out
        assert "A_1 = {0, 2, 4, 6, 8, 10, 12, 14}" in out
        assert "A_2 = {1, 5, 9, 13}" in out
        assert "A_3 = {3, 11}" in out
        assert "B = {0, 1, 3, 11, 13, 14}" in out


class TestWeightsCommand:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "weights", "-n", "14")
        assert code == 0
        for w in (9908, 6476, 9544, 6840, 9907, 6477, 9894, 6490):
            assert str(w) in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "weights", "-n", "14", "--format", "json")
        data = json.loads(out)
        assert {e["weight"] for e in data["weights"]} == {
            9908, 6476, 9544, 6840, 9907, 6477, 9894, 6490,
        }


class TestVerifyCommand:
    def test_exhaustive_n8(self, capsys):
        code, out, _ = run(capsys, "verify", "-n", "8", "--exhaustive")
        assert code == 0
        assert out.strip() == "24/512 max-AI, sets equal"

    def test_sample_small(self, capsys):
        code, out, _ = run(capsys, "verify", "-n", "4", "--sample", "10", "--seed", "0")
        assert code == 0
        assert "12 enumerated all AI=2; 10 sampled non-enumerated all AI<2" in out

    def test_injected_fault_detected(self, capsys, monkeypatch):
        import maxai.verify as verify_mod
        from maxai.enumeration import MaxAiRecord
        from maxai.gf2 import BitVec

        real = enumerate_all(8)
        poisoned = list(real)
        bad = SymFn(8, BitVec(9, real[0].f.svv.bits ^ (1 << 2)))
        poisoned[0] = MaxAiRecord(bad, real[0].case, real[0].params)
        monkeypatch.setattr(verify_mod, "enumerate_all", lambda n: poisoned)
        code, out, _ = run(capsys, "verify", "-n", "8", "--exhaustive")
        assert code == 1
        assert "sets differ" in out and "svv=" in out

    def test_exhaustive_cap(self, capsys):
        assert run(capsys, "verify", "-n", "14", "--exhaustive")[0] == 2

    def test_sampled_cap(self, capsys):
        assert run(capsys, "verify", "-n", "18", "--sample", "5")[0] == 2

    def test_deterministic_output(self, capsys):
        a = run(capsys, "verify", "-n", "4", "--sample", "15", "--seed", "3")
        b = run(capsys, "verify", "-n", "4", "--sample", "15", "--seed", "3")
        assert a == b


def test_unknown_command_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
