import json

import pytest

from hirzewahl.cli import TSV_HEADER, main, parse_range


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_genus(capsys):
    code, out, _ = run(capsys, "genus", "--n", "0", "--a", "6", "--b", "9", "--delta", "1")
    assert code == 0 and out.strip() == "g=40 g~=39"


def test_corank_json(capsys):
    code, out, _ = run(capsys, "corank", "--n", "0", "--a", "6", "--b", "9", "--delta", "1",
                       "--format", "json")
    assert code == 0 and json.loads(out)["corank"] == 9


def test_strict_exit(capsys):
    code, _, _ = run(capsys, "corank", "--n", "0", "--a", "5", "--b", "9", "--delta", "1", "--strict")
    assert code == 1
    code, _, _ = run(capsys, "corank", "--n", "0", "--a", "5", "--b", "9", "--delta", "1")
    assert code == 0


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["genus", "--n", "0", "--a", "1", "--b", "1", "--bogus"])
    assert exc.value.code == 2
    assert "usage" in capsys.readouterr().err
    code, _, err = run(capsys, "gaussian-rank", "--n", "0", "--a", "6", "--b", "9", "--delta", "1",
                       "--max-wedge", "10")
    assert code == 2 and "max-wedge" in err


def test_scan_tsv(capsys, tmp_path):
    argv = ["scan", "--n", "0..2", "--a", "6..8", "--b", "6..20", "--delta", "1..2", "--format", "tsv"]
    code, out, _ = run(capsys, *argv)
    lines = out.rstrip("\n").split("\n")
    assert code == 0
    assert lines[0] == "\t".join(TSV_HEADER)
    assert len(lines) == 1 + 3 * 3 * 15 * 2
    assert all(len(x.split("\t")) == len(TSV_HEADER) for x in lines)
    # byte-identical on rerun, and with a process pool
    assert run(capsys, *argv)[1] == out
    target = tmp_path / "scan.tsv"
    assert main(argv + ["--jobs", "2", "--output", str(target)]) == 0
    assert target.read_text() == out


def test_scan_json(capsys):
    code, out, _ = run(capsys, "scan", "--n", "0", "--a", "6", "--b", "9", "--delta", "1",
                       "--format", "json")
    row = json.loads(out)["rows"][0]
    assert row["corank"] == 9 and row["thmA"] is True and set(row) == set(TSV_HEADER)


def test_other_commands(capsys):
    assert run(capsys, "intersect", "--n", "1", "--d1", "1,0", "--d2", "1,0")[1].strip() == "-1"
    assert run(capsys, "intersect", "--n", "0", "--d1", "0,0:-1", "--d2", "0,0:-1")[1].strip() == "-1"
    assert "h0=9" in run(capsys, "cohomology", "--n", "0", "--a", "2", "--b", "2")[1]
    out = run(capsys, "cohomology", "--n", "0", "--a", "6", "--b", "9", "--delta", "1")[1]
    assert "twist2: h0=217" in out
    assert "very_ample=true" in run(capsys, "check-ample", "--n", "2", "--a", "1", "--b", "3")[1]
    assert "ample=false" in run(capsys, "check-ample", "--n", "1", "--a", "1", "--b", "1", "--m", "1")[1]
    code, out, _ = run(capsys, "check-reider", "--n", "0", "--a", "3", "--b", "3", "--delta", "1",
                       "--strict")
    assert code == 1 and "blocker" in out
    code, out, _ = run(capsys, "check-reider", "--n", "0", "--delta", "1", "--class", "2,3:1")
    assert code == 0 and "verdict=true" in out
    assert "jet_ample=true" in run(capsys, "check-jet", "--n", "1", "--a", "5", "--b", "9", "--delta", "2")[1]
    assert "lhs=9 rhs=8" in run(capsys, "conjecture", "--n", "0", "--delta", "1")[1]
    code, out, _ = run(capsys, "gaussian-rank", "--n", "0", "--a", "6", "--b", "9", "--delta", "1")
    assert code == 0 and "rank=217" in out and "timing" not in out


def test_parse_range():
    assert parse_range("2..5") == (2, 5)
    assert parse_range("3") == (3, 3)
    with pytest.raises(Exception):
        parse_range("5..2")
