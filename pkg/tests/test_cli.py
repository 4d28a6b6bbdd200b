from __future__ import annotations

import json
import subprocess
import sys

from hilb2 import cli
from hilb2.grading import Grading
from hilb2.staircase import HilbertFunction, MonomialIdeal

M642 = '{"gens": [[4,0],[2,1],[0,2]]}'
Z3 = '{"free_rank": 0, "torsion": [3], "deg_x": {"torsion": [1]}, "deg_y": {"torsion": [1]}}'
DEG_ONE = '{"free_rank": 1, "deg_x": {"free": [1]}, "deg_y": {"free": [1]}}'
H1221 = json.dumps([{"degree": {"free": [d]}, "value": k} for d, k in enumerate([1, 2, 2, 1])])


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_paper(capsys):
    code, out, _ = run(capsys, "verify-paper")
    assert code == 0
    assert "FAIL" not in out and out.count("PASS") == 9


def test_poset_dot_has_six_nodes(capsys, tmp_path):
    dot = tmp_path / "p.dot"
    code, _, _ = run(capsys, "poset", "--grading", DEG_ONE, "--hilbert", H1221, "--dot", str(dot))
    assert code == 0
    assert dot.read_text().count("[label=") == 6


def test_factor_report(capsys):
    code, out, _ = run(capsys, "factor", "--grading",
                       '{"free_rank": 1, "deg_x": {"free": [1]}, "deg_y": {"free": [-1]}}',
                       "--ideal", '{"gens": [[4,3],[3,4],[2,5]]}')
    assert code == 0
    assert out.strip() == "X = A^2, Q = <x^2,x*y,y^2>"


def test_ideal_stands_in_for_hilbert_function(capsys):
    code, out, _ = run(capsys, "enumerate", "--grading", Z3, "--ideal", '{"gens":[[5,0],[1,1],[0,2]]}')
    assert code == 0
    data = json.loads(out)
    assert [e["value"] for e in data["hilbert"]] == [2, 3, 1]
    assert {MonomialIdeal.from_json(e) for e in data["ideals"]} == {
        MonomialIdeal([(5, 0), (1, 1), (0, 2)]), MonomialIdeal([(2, 0), (1, 1), (0, 5)])}


def test_grading_and_hilbert_from_files(capsys, tmp_path):
    g = tmp_path / "g.json"
    h = tmp_path / "h.json"
    g.write_text(DEG_ONE)
    h.write_text(H1221)
    code, out, _ = run(capsys, "poset", "--grading", str(g), "--hilbert", str(h))
    assert code == 0
    data = json.loads(out)
    assert Grading.from_json(data["grading"]) == Grading.integral(1, 1)
    assert HilbertFunction.from_json(data["hilbert"]).total == 6
    assert len(data["maximal"]) == 1


def test_malformed_residue_exits_2(capsys):
    bad = '{"free_rank": 0, "torsion": [3], "deg_x": {"torsion": [4]}, "deg_y": {"torsion": [1]}}'
    code, _, err = run(capsys, "arrows", "--grading", bad, "--ideal", M642)
    assert code == 2 and "residue" in err


def test_parse_error_reports_line(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{\n  "gens": [[1, 0],\n}\n')
    code, _, err = run(capsys, "arrows", "--ideal", str(path))
    assert code == 2 and "line 3" in err


def test_missing_file_exits_2(capsys):
    code, _, _ = run(capsys, "arrows", "--ideal", "no-such-file.json")
    assert code == 2


def test_bad_arrow_exits_1(capsys):
    code, _, err = run(capsys, "edge", "--ideal", M642, "--alpha", "1,1,1")
    assert code == 1 and "NotPositiveSignificant" in err


def test_edge_command(capsys):
    code, out, _ = run(capsys, "edge", "--ideal", M642, "--alpha", "1,3,0", "--t", "2")
    assert code == 0
    data = json.loads(out)
    assert data["sigma"] == 0
    assert MonomialIdeal.from_json(data["initial_lex"]) == MonomialIdeal([(3, 0), (1, 1), (0, 4)])
    assert MonomialIdeal.from_json(data["initial_xel"]) == MonomialIdeal([(4, 0), (2, 1), (0, 2)])


def test_tangent_command(capsys, tmp_path):
    dump = tmp_path / "system.json"
    code, out, _ = run(capsys, "tangent", "--ideal", M642, "--alpha", "1,3,0", "--t", "1/3",
                       "--dump", str(dump))
    assert code == 0
    assert "r = 18" in out and "dimension = 12" in out and "FAIL" not in out
    assert len(json.loads(dump.read_text())["equations"]) == 12


def test_chart_output_is_deterministic(capsys, tmp_path):
    args = ("chart", "--hilbert", '[{"degree": {}, "value": 3}]', "--seed", "9", "--samples", "3")
    first = run(capsys, *args)
    second = run(capsys, *args)
    assert first == second and first[0] == 0
    assert "d = 6" in first[1]


def test_chain_and_lexmost(capsys):
    code, out, _ = run(capsys, "chain", "--ideal", M642)
    assert code == 0
    assert MonomialIdeal.from_json(json.loads(out)["end"]) == MonomialIdeal([(1, 0), (0, 6)])
    code, out, _ = run(capsys, "lexmost", "--ideal", M642)
    assert json.loads(out)["text"] == "<x,y^6>"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hilb2", "arrows", "--ideal", M642],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["counts"]["total"] == 18
