import json

import pytest

from poincare.cli import main
from poincare.tablefile import TableFile, parse_text, text_line


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_text(capsys):
    code, out, _ = run(capsys, "compute", "--n", "5", "--no-cache")
    assert code == 0
    assert out.splitlines()[0] == "A[5] = [1,0,0,0,0,0,-1]"
    assert out.splitlines()[1] == "B[5] = (1-t^4)(1-t^6)(1-t^8)"


def test_compute_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["compute", "--n", "2"])
    assert exc.value.code == 2


def test_compute_json(capsys):
    code, out, _ = run(capsys, "compute", "--n", "8", "--emit", "json", "--no-cache")
    doc = json.loads(out)
    assert code == 0 and doc["half"] == [1, 1, 0, -1, -1, 0, 1, 1, 1]
    assert set(doc) == {"n", "s", "delta", "half", "denominator", "seed", "primes"}
    assert doc["denominator"]["kind"] == "even4"
    assert doc["denominator"]["factors"][-1] == {"factor": "1+t^3", "sign": 1, "j": 3, "power": -1}
    assert doc["primes"] == [65521, 65519, 65497, 65479, 65449, 65447, 65437] and doc["seed"] == 42


def test_compute_bench(capsys):
    code, _, err = run(capsys, "compute", "--n", "6", "--bench", "--no-cache")
    assert code == 0 and "solves=" in err and "interpolation=" in err and "crt=" in err


def test_certify_commands(capsys):
    code, out, _ = run(capsys, "certify", "--n", "5", "--no-cache")
    assert code == 0 and out.strip() == "CERTIFIED n=5 K=30"
    code, out, _ = run(capsys, "certify", "--n", "3", "--no-cache")
    assert code == 0 and "K=4" in out


def test_fixture5(capsys):
    code, out, _ = run(capsys, "fixture5", "--verbose")
    assert code == 0 and "16 terms" in out
    code, _, _ = run(capsys, "fixture5", "--inject-fault", "0")
    assert code == 1


def test_table_single(capsys, tmp_path):
    out = tmp_path / "t.json"
    code, _, _ = run(capsys, "table", "--from", "3", "--to", "3", "--out", str(out), "--no-cache")
    assert code == 0
    assert (tmp_path / "t.txt").read_text() == "A[3] = [1]\n"
    assert TableFile.load(out).halves() == {3: [1]}


def test_table_io_error(capsys, tmp_path):
    code, _, _ = run(capsys, "table", "--from", "3", "--to", "4", "--out",
                     str(tmp_path / "missing" / "t.json"), "--no-cache")
    assert code == 3


def test_table_bad_range(capsys):
    code, _, _ = run(capsys, "table", "--from", "6", "--to", "4", "--no-cache")
    assert code == 2


def test_warm_cache_reproduces_file(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("POINCARE_CACHE_DIR", str(tmp_path / "cache"))
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(capsys, "table", "--from", "3", "--to", "9", "--out", str(a))[0] == 0
    assert len(list((tmp_path / "cache").glob("*.json"))) == 7
    assert run(capsys, "table", "--from", "3", "--to", "9", "--out", str(b), "--bench")[0] == 0
    assert a.read_bytes() == b.read_bytes()
    assert (tmp_path / "a.txt").read_bytes() == (tmp_path / "b.txt").read_bytes()


def test_corrupted_cache_entry_is_recomputed(capsys, tmp_path, monkeypatch):
    cache = tmp_path / "cache"
    monkeypatch.setenv("POINCARE_CACHE_DIR", str(cache))
    assert run(capsys, "compute", "--n", "7")[0] == 0
    (entry,) = cache.glob("A7-*.json")
    raw = json.loads(entry.read_text())
    raw["entry"]["half"][3] = 9
    entry.write_text(json.dumps(raw))
    code, out, _ = run(capsys, "compute", "--n", "7")
    assert code == 0 and out.startswith("A[7] = [1,0,0,0,0,0,-1,0,2")


def test_verify(capsys, tmp_path):
    t = tmp_path / "t.json"
    assert run(capsys, "table", "--from", "5", "--to", "7", "--out", str(t), "--no-cache")[0] == 0
    code, out, _ = run(capsys, "verify", "--against", str(t), "--no-cache")
    assert code == 0 and "all entries match" in out
    doc = json.loads(t.read_text())
    doc["entries"]["6"]["half"][1] = 2
    t.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "verify", "--against", str(t), "--no-cache")
    assert code == 1 and "n=[6]" in out
    assert run(capsys, "verify", "--against", str(tmp_path / "nope.json"))[0] == 3


def test_figures(capsys, tmp_path):
    code, _, _ = run(capsys, "table", "--from", "5", "--to", "8", "--no-cache",
                     "--out", str(tmp_path / "t.json"), "--figures", str(tmp_path / "fig"))
    assert code == 0
    assert (tmp_path / "fig" / "coefficient_growth.png").stat().st_size > 0
    assert (tmp_path / "fig" / "wall_time.png").stat().st_size > 0


def test_text_format_roundtrip():
    line = text_line(7, [1, 0, -1, 12345678901234567890])
    assert line == "A[7] = [1,0,-1,12345678901234567890]"
    assert parse_text("A[7] = [1, 0,\n  -1,\n 12345678901234567890]") == {7: [1, 0, -1, 12345678901234567890]}


def test_big_integers_serialised_as_strings(results):
    from poincare.tablefile import int_in, int_out

    assert int_out(2**53) == str(2**53) and int_out(-(2**60)) == str(-(2**60))
    assert int_out(2**53 - 1) == 2**53 - 1
    assert int_in("12345678901234567890123") == 12345678901234567890123
    doc = results[19].to_json()
    assert doc["half"][-1] == 206054755643582  # 15 digits still fit in 53 bits
    back = TableFile(entries={19: json.loads(json.dumps(doc))}).halves()[19]
    assert back == list(results[19].table.half)
