import json
import os
import subprocess
import sys

import pytest

from pattern_lister.cli import main

from conftest import FIXTURES


def fx(name):
    return os.path.join(FIXTURES, name)


def run(args, capsys):
    code = main(args)
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_count_only(capsys):
    code, out, err = run(["list", "subtrees", "-k", "3", fx("g_tree.txt"), "--count-only"], capsys)
    assert code == 0 and out == "9\n"
    report = json.loads(err)
    assert report["count"] == 9 and report["output_size"] == 18 and report["ops"] > 0


def test_cycles_lines(capsys):
    code, out, _ = run(["list", "cycles", fx("g_path.txt"), "--format", "lines"], capsys)
    assert code == 0
    assert out.splitlines() == ["a e s", "a e t c s", "c s e t"]


def test_paths_oracle(capsys):
    code, out, _ = run(["list", "paths", "-s", "s", "-t", "t", fx("g_path.txt"),
                        "--check-oracle"], capsys)
    assert code == 0 and "oracle: MATCH" in out
    assert sorted(out.splitlines()[:3]) == ["s a e t", "s c t", "s e t"]


def test_subgraphs_json(capsys):
    code, out, _ = run(["list", "subgraphs", "-k", "3", fx("g_sub.txt"), "--format", "json"], capsys)
    data = json.loads(out)
    assert code == 0 and len(data) == 10
    assert all(d["vertices"] == sorted(d["vertices"]) for d in data)


@pytest.mark.parametrize("pattern,extra", [("subtrees", ["-k", "3"]), ("subgraphs", ["-k", "3"]),
                                           ("paths", ["-s", "s", "-t", "t"]), ("cycles", [])])
def test_count_only_matches_lines(pattern, extra, capsys):
    for name in ("g_tree.txt", "g_sub.txt", "g_path.txt"):
        if pattern == "paths" and name != "g_path.txt":
            continue
        _, full, _ = run(["list", pattern, *extra, fx(name)], capsys)
        _, again, _ = run(["list", pattern, *extra, fx(name)], capsys)
        _, count, _ = run(["list", pattern, *extra, fx(name), "--count-only"], capsys)
        assert full == again
        assert len(full.splitlines()) == int(count)


def test_instrument_and_delay(capsys, tmp_path):
    rep = tmp_path / "r.json"
    code, out, err = run(["list", "subtrees", "-k", "3", fx("g_sub.txt"), "--delay-mode",
                          "--instrument", "--check-oracle", "--report", str(rep)], capsys)
    assert code == 0 and err == "" and "oracle: MATCH" in out
    report = json.loads(rep.read_text())
    assert report["invariants"]["failures"] == []


def test_usage_errors(capsys):
    assert run(["list", "paths", fx("g_path.txt")], capsys)[0] == 2
    assert run(["list", "subtrees", fx("g_path.txt")], capsys)[0] == 2
    assert run(["list", "cycles", fx("g_path.txt"), "--delay-mode"], capsys)[0] == 2
    code, _, err = run(["list", "paths", "-s", "s", "-t", "zz", fx("g_path.txt")], capsys)
    assert code == 2 and "zz" in err
    assert run(["list", "cycles", "/nonexistent/file"], capsys)[0] == 2
    assert run(["gen", "random", "-n", "4", "-m", "9"], capsys)[0] == 2
    with pytest.raises(SystemExit):
        main(["list", "trees", fx("g_path.txt")])


def test_gen(capsys):
    _, out, _ = run(["gen", "diamond", "-k", "2"], capsys)
    lines = out.splitlines()
    assert len(lines) == 9 and len({x for l in lines for x in l.split()}) == 7
    _, out, _ = run(["gen", "cycle", "-n", "4"], capsys)
    assert len(out.splitlines()) == 4
    _, a, _ = run(["gen", "random", "-n", "10", "-m", "20", "--seed", "7"], capsys)
    _, b, _ = run(["gen", "random", "-n", "10", "-m", "20", "--seed", "7"], capsys)
    assert a == b and len(a.splitlines()) == 20
    _, out, _ = run(["gen", "complete", "-n", "5"], capsys)
    assert len(out.splitlines()) == 10


def test_gen_cycle_lists_one_cycle(capsys, tmp_path):
    _, out, _ = run(["gen", "cycle", "-n", "4"], capsys)
    f = tmp_path / "c4.txt"
    f.write_text(out)
    _, out, _ = run(["list", "cycles", str(f), "--count-only"], capsys)
    assert out == "1\n"


def test_bench(capsys):
    code, out, _ = run(["bench", "diamond", "--sizes", "2,4"], capsys)
    rows = out.splitlines()
    assert code == 0 and rows[0].startswith("variant,size")
    assert rows[1].split(",")[4] == "6" and rows[2].split(",")[4] == "28"
    code, out, _ = run(["bench", "cycle", "--pattern", "subtrees", "--sweep-k", "12",
                        "--sizes", "3,4", "--baseline"], capsys)
    assert code == 0 and sum(r.startswith("baseline") for r in out.splitlines()) == 2


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "pattern_lister", "list", "subgraphs", "-k", "3",
                        fx("g_sub.txt"), "--count-only"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout == "10\n"
