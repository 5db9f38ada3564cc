import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from mbdom.cli import main
from mbdom.families import build_F
from mbdom.graph import path
from mbdom.graph6 import edge_list_text, encode

DATA = Path(__file__).parent / "data"
P5 = encode(path(5))


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_solve_c5(capsys):
    code, out, _ = run(capsys, "solve", "--game", "s", "--g6", "Dhc")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "gamma'_MB = 2"
    assert lines[1].startswith("transcript: s1=") and lines[1].count("=") == 4


def test_solve_p5_and_k2(capsys):
    code, out, _ = run(capsys, "solve", "--game", "s", "--g6", P5)
    assert code == 0 and out.startswith("gamma'_MB = inf\ntranscript: s1=1,")
    code, out, _ = run(capsys, "solve", "--game", "s", "--g6", "A_")
    assert out.startswith("gamma'_MB = 1")


def test_solve_edges_and_predominated(capsys, tmp_path):
    f = tmp_path / "p5.txt"
    f.write_text(edge_list_text(path(5)))
    code, out, _ = run(capsys, "solve", "--game", "d", "--edges", str(f), "--predominated", "0,1,2")
    assert code == 0 and out.startswith("gamma_MB = 1")


@pytest.mark.parametrize("argv", [
    ["solve", "--game", "s", "--g6", "D!!"],
    ["solve", "--game", "s", "--g6", "Dhc", "--predominated", "9"],
    ["solve", "--game", "s", "--edges", "/nonexistent/file"],
    ["family", "gen", "F:0,1,2"],
    ["census", "--builtin", "7"],
    ["census", "--builtin", "5", "--checks", "bogus"],
    ["census", "--file", "/nonexistent.g6"],
    ["oracle-diff", "--nmax", "8"],
    ["verify", "--check", "nope"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["solve", "--game", "x", "--g6", "Dhc"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_family_gen_missing_constraint(capsys):
    code, _, err = run(capsys, "family", "gen", "F:0,1,2")
    assert code == 2 and "m1=0 requires t>=2" in err


def test_family_round_trip(capsys):
    code, out, _ = run(capsys, "family", "gen", "F:2,1,2")
    line, roles = out.splitlines()
    assert code == 0 and line == encode(build_F(2, 1, 2)) and ord(line[0]) - 63 == 7
    assert json.loads(roles)["v1"] == [0]
    code, out, _ = run(capsys, "family", "check", "--g6", line)
    assert "F: yes" in out.splitlines() and "B: no" in out.splitlines()


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--g6", "Dhc")
    data = json.loads(out)
    assert code == 0 and data["critical_s"] and data["family"]["C5"]


def test_census_builtin(capsys, tmp_path):
    code, out, _ = run(capsys, "census", "--builtin", "5", "--checks", "all", "--out", str(tmp_path))
    assert code == 0 and out.startswith("21 graphs, 2 connected 2-critical, 0 violations")
    assert {p.name for p in tmp_path.iterdir()} == {
        "report.json", "criticals.jsonl", "violations.txt", "violations.json"}
    ids = [json.loads(l)["canonical_id"] for l in (tmp_path / "criticals.jsonl").read_text().splitlines()]
    assert sorted(ids) == sorted(["DFw", "DLo"])


def test_census_cut_vertex(capsys, tmp_path):
    code, _, _ = run(capsys, "census", "--builtin", "6", "--checks", "thm_cutvertex", "--out", str(tmp_path))
    assert code == 0
    recs = [json.loads(l) for l in (tmp_path / "criticals.jsonl").read_text().splitlines()]
    assert [r["canonical_id"] for r in recs if r["has_cut_vertex"]] == ["E@ro"]


def test_census_planted_violation(capsys, tmp_path):
    code, out, _ = run(capsys, "census", "--file", str(DATA / "planted.g6"), "--out", str(tmp_path))
    assert code == 1
    violations = json.loads((tmp_path / "violations.json").read_text())
    assert [(v["check"], v["line"]) for v in violations] == [("decode", 3)]
    assert "decode" in out


def test_census_jobs_byte_identical(capsys, tmp_path):
    for jobs in ("1", "2"):
        assert run(capsys, "census", "--builtin", "6", "--jobs", jobs,
                   "--out", str(tmp_path / jobs))[0] == 0
    for name in ("report.json", "criticals.jsonl", "violations.json", "violations.txt"):
        assert (tmp_path / "1" / name).read_bytes() == (tmp_path / "2" / name).read_bytes()


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--check", "lemma_NoLeaves", "--nmax", "5", "--seed", "4")
    assert code == 0 and "0 violations" in out


def test_oracle_diff(capsys):
    code, out, _ = run(capsys, "oracle-diff", "--nmax", "5")
    assert code == 0 and out.strip() == "62 comparisons, 0 mismatches"
    code, out, _ = run(capsys, "oracle-diff", "--nmax", "6", "--samples", "20", "--seed", "1")
    assert code == 0 and out.strip() == "102 comparisons, 0 mismatches"


def play(capsys, monkeypatch, moves, *argv):
    monkeypatch.setattr(sys, "stdin", io.StringIO("".join(f"{m}\n" for m in moves)))
    return run(capsys, "play", *argv)


@pytest.mark.parametrize("moves", [[0, 2, 4], [4, 3, 2], [2, 0, 1]])
def test_play_staller_on_c5(capsys, monkeypatch, moves):
    # the human's later moves may become illegal; the session just re-prompts
    code, out, _ = play(capsys, monkeypatch, moves + [0, 1, 2, 3, 4], "--g6", "Dhc", "--as", "staller")
    assert code == 0 and "dominator wins with 2 moves" in out


@pytest.mark.parametrize("moves", [[0, 2, 4], [1, 2, 3], [3, 4, 0]])
def test_play_dominator_on_p5(capsys, monkeypatch, moves):
    code, out, _ = play(capsys, monkeypatch, moves + [0, 1, 2, 3, 4], "--g6", P5, "--as", "dominator")
    assert code == 0 and "staller wins" in out


def test_play_reprompts(capsys, monkeypatch, tmp_path):
    save = tmp_path / "t.txt"
    code, out, _ = play(capsys, monkeypatch, [17, "x", 0, 0, 2], "--g6", "Dhc", "--as", "staller",
                        "--save", str(save))
    assert code == 0
    assert "vertex 17 is not available" in out and "not a vertex: 'x'" in out
    assert save.read_text().startswith("s1=0, d1=1")


def test_play_input_ends(capsys, monkeypatch):
    code, out, _ = play(capsys, monkeypatch, [], "--g6", "Dhc", "--as", "staller")
    assert code == 2 and "input ended" in out


def test_module_entry_point():
    done = subprocess.run([sys.executable, "-m", "mbdom", "solve", "--game", "s", "--g6", "Dhc"],
                          capture_output=True, text=True)
    assert done.returncode == 0 and done.stdout.startswith("gamma'_MB = 2")
