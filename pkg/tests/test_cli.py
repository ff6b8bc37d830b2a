import csv
import json

import pytest

from esmine import cli, tidlist
from esmine.cli import format_ratio, main


def run_mine(table1_file, tmp_path, *extra, name="out.txt"):
    out = tmp_path / name
    code = main(["mine", "--algo", "eclat", "--minsup-abs", "3",
                 "--input", str(table1_file), "--output", str(out), *extra])
    return code, out


def test_mine_writes_itemsets(table1_file, tmp_path):
    code, out = run_mine(table1_file, tmp_path, "--no-es")
    assert code == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 15
    assert "0 2 3 (3)" in lines
    assert lines[:2] == ["1 (3)", "1 2 (3)"]


def test_mine_es_output_identical(table1_file, tmp_path):
    _, plain = run_mine(table1_file, tmp_path, "--no-es", name="a.txt")
    _, es = run_mine(table1_file, tmp_path, "--es", name="b.txt")
    assert plain.read_bytes() == es.read_bytes()


def test_mine_metrics_record(table1_file, tmp_path):
    metrics = tmp_path / "m.json"
    code, _ = run_mine(table1_file, tmp_path, "--es", "--metrics", str(metrics))
    assert code == 0
    rec = json.loads(metrics.read_text())
    assert rec["format_version"] == 1
    assert (rec["algorithm"], rec["early_stopping"]) == ("Eclat", True)
    assert (rec["num_candidates"], rec["num_expanded"], rec["ratio"]) == (15, 10, "1.50")
    assert rec["minsup_abs"] == 3 and rec["minsup_rel"] == 0.3


def test_mine_relative_minsup(table1_file, tmp_path):
    out = tmp_path / "r.txt"
    assert main(["mine", "--algo", "prepost", "--minsup-rel", "0.3",
                 "--input", str(table1_file), "--output", str(out)]) == 0
    assert len(out.read_text().splitlines()) == 15


@pytest.mark.parametrize("argv", [
    ["mine", "--algo", "eclat", "--minsup-abs", "0", "--input", "x", "--output", "y"],
    ["mine", "--algo", "eclat", "--input", "x", "--output", "y"],
    ["mine", "--algo", "eclat", "--minsup-abs", "2", "--minsup-rel", "0.1",
     "--input", "x", "--output", "y"],
    ["mine", "--algo", "apriori", "--minsup-abs", "2", "--input", "x", "--output", "y"],
    ["mine", "--algo", "eclat", "--es", "--no-es", "--minsup-abs", "2",
     "--input", "x", "--output", "y"],
])
def test_mine_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 1


def test_mine_bad_relative_is_usage_error(table1_file, tmp_path):
    code = main(["mine", "--algo", "eclat", "--minsup-rel", "1.5",
                 "--input", str(table1_file), "--output", str(tmp_path / "o")])
    assert code == 1


def test_mine_io_errors(tmp_path):
    code = main(["mine", "--algo", "eclat", "--minsup-abs", "2",
                 "--input", str(tmp_path / "missing.dat"), "--output", str(tmp_path / "o")])
    assert code == 2
    bad = tmp_path / "bad.dat"
    bad.write_text("1 2\nfoo\n")
    code = main(["mine", "--algo", "eclat", "--minsup-abs", "2",
                 "--input", str(bad), "--output", str(tmp_path / "o")])
    assert code == 2


@pytest.mark.parametrize("c, e, text", [(15, 10, "1.50"), (2, 3, "0.67"), (1, 8, "0.13"),
                                        (5, 0, ""), (0, 4, "0.00"), (1001, 200, "5.01")])
def test_format_ratio(c, e, text):
    assert format_ratio(c, e) == text


def read_csv(path):
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))


def test_bench_table1(table1_file, tmp_path):
    out, report = tmp_path / "b.csv", tmp_path / "b.jsonl"
    assert main(["bench", "--input", str(table1_file), "--minsup-abs", "3",
                 "--repetitions", "2", "--csv", str(out), "--report", str(report)]) == 0
    rows = read_csv(out)
    assert list(rows[0]) == cli.CSV_COLUMNS
    assert [(r["algorithm"], r["early_stopping"]) for r in rows] == [
        ("Eclat", "0"), ("Eclat", "1"), ("dEclat", "0"), ("dEclat", "1"),
        ("PrePost+", "0"), ("PrePost+", "1")]
    for r in rows:
        assert (r["num_candidates"], r["num_expanded"], r["ratio"]) == ("15", "10", "1.50")
        assert len(r["runtime_ms_per_run"].split(";")) == 2
    for std, es in zip(rows[::2], rows[1::2]):
        assert int(es["num_comparisons"]) < int(std["num_comparisons"])
    assert len(report.read_text().splitlines()) == 6


def test_bench_counters_independent_of_repetitions(table1_file, tmp_path):
    counters = []
    for reps in ("1", "10"):
        out = tmp_path / f"b{reps}.csv"
        main(["bench", "--input", str(table1_file), "--minsup-abs", "2", "3",
              "--repetitions", reps, "--csv", str(out)])
        counters.append([(r["num_candidates"], r["num_expanded"], r["num_frequent"],
                          r["num_comparisons"]) for r in read_csv(out)])
    assert counters[0] == counters[1]
    assert len(counters[0]) == 12


def test_bench_needs_minsup(table1_file, tmp_path):
    assert main(["bench", "--input", str(table1_file), "--csv", str(tmp_path / "c")]) == 1


def test_gen(tmp_path):
    a, b = tmp_path / "a.dat", tmp_path / "b.dat"
    flags = ["--trans", "1000", "--items", "50", "--mean-len", "8", "--seed", "7"]
    assert main(["gen", *flags, "--output", str(a)]) == 0
    assert main(["gen", *flags, "--output", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    lines = a.read_text().splitlines()
    assert abs(sum(len(l.split()) for l in lines) / len(lines) - 8) <= 1.6
    empty = tmp_path / "e.dat"
    main(["gen", "--trans", "0", "--items", "5", "--mean-len", "2", "--seed", "1",
          "--output", str(empty)])
    assert empty.read_text() == ""
    assert main(["gen", "--trans", "5", "--items", "3", "--mean-len", "9", "--seed", "1",
                 "--output", str(empty)]) == 1


def test_verify_table1(table1_file, capsys):
    assert main(["verify", "--input", str(table1_file), "--minsup-abs", "3"]) == 0
    assert capsys.readouterr().out.strip() == "ok"


def test_verify_fuzz():
    assert main(["verify", "--fuzz", "200"]) == 0


def test_verify_catches_corrupted_kernel(table1_file, monkeypatch, capsys):
    real = tidlist.intersect

    def broken(u, v):
        out = real(u, v)
        return type(out)(out.result[:-1], out.comparisons)

    monkeypatch.setattr(tidlist, "intersect", broken)
    assert main(["verify", "--input", str(table1_file), "--minsup-abs", "3"]) == 3
    out = capsys.readouterr().out
    assert "Eclat: itemset {" in out


def test_verify_guard(tmp_path):
    wide = tmp_path / "wide.dat"
    wide.write_text(" ".join(map(str, range(30))) + "\n")
    assert main(["verify", "--input", str(wide), "--minsup-abs", "1"]) == 1


def test_verify_needs_work():
    assert main(["verify"]) == 1
