from __future__ import annotations

import json
import subprocess
import sys

import pytest

from conftest import isomorphic
from distpow import graph6
from distpow.cli import main
from distpow.distinguishing import Labeling
from distpow.graph import cycle, path, star


def write(tmp_path, name, *graphs_or_text):
    f = tmp_path / name
    lines = [x if isinstance(x, str) else graph6.write(x) for x in graphs_or_text]
    f.write_text("\n".join(lines) + "\n")
    return str(f)


def test_compute_aut(tmp_path, capsys):
    src = write(tmp_path, "c4.g6", cycle(4))
    assert main(["compute", "--in", src, "--what", "aut"]) == 0
    record = json.loads(capsys.readouterr().out)
    assert record == {"graph": graph6.write(cycle(4)), "quantity": "aut", "value": 8}


def test_compute_records_with_certificates(tmp_path):
    src = write(tmp_path, "g.g6", cycle(5), path(4))
    out = tmp_path / "d.json"
    assert main(["compute", "--in", src, "--what", "D", "--json", str(out)]) == 0
    records = json.loads(out.read_text())
    assert [r["value"] for r in records] == [3, 2]
    assert set(records[0]) == {"graph", "quantity", "value", "certificate"}
    assert Labeling.from_json(records[0]["certificate"]).labels_used == 3


def test_compute_undefined_index_fails(tmp_path):
    src = write(tmp_path, "k2.g6", path(2))
    assert main(["compute", "--in", src, "--what", "Dprime"]) == 1


def test_transform_subdivide_triangle(tmp_path):
    src = write(tmp_path, "c3.g6", cycle(3))
    out, se = tmp_path / "c6.g6", tmp_path / "se.json"
    assert main(["transform", "--in", src, "--op", "subdivide:2", "--out", str(out), "--superedges", str(se)]) == 0
    (g,) = graph6.read_file(out)
    assert isomorphic(g, cycle(6))
    assert json.loads(se.read_text())[0] == {"edge": [0, 1], "internal": [3]}


@pytest.mark.parametrize("op, n", [("power:2", 5), ("frac:2/2:sp", 9), ("frac:2/2:ps", 12)])
def test_transform_ops(tmp_path, op, n):
    src = write(tmp_path, "p5.g6", path(5))
    out = tmp_path / "o.g6"
    assert main(["transform", "--in", src, "--op", op, "--out", str(out)]) == 0
    assert graph6.read_file(out)[0].n == n


def test_label_star(tmp_path):
    out = tmp_path / "l.json"
    assert main(["label", "--method", "star:3,2,2", "--out", str(out)]) == 0
    lab = Labeling.from_json(json.loads(out.read_text()))
    assert lab.kind == "vertex" and lab.d == 2


@pytest.mark.parametrize("method", ["bfs:2", "pair", "tuple:3"])
def test_label_methods_on_star(tmp_path, method):
    src = write(tmp_path, "s.g6", star(3))
    out = tmp_path / "l.json"
    assert main(["label", "--in", src, "--method", method, "--out", str(out)]) == 0


def test_label_pathpower(tmp_path):
    out = tmp_path / "l.json"
    assert main(["label", "--method", "pathpower:5,3", "--out", str(out)]) == 0
    assert Labeling.from_json(json.loads(out.read_text())).labels_used == 3


def test_malformed_graph6_is_usage_error(tmp_path, capsys):
    src = write(tmp_path, "bad.g6", "C~x")
    assert main(["compute", "--in", src, "--what", "D"]) == 2
    assert "byte offset 2" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        ["transform", "--in", "X", "--op", "rotate:2", "--out", "o"],
        ["label", "--method", "bfs:2", "--out", "o"],
        ["verify", "--claims", "NOPE", "--out", "o"],
        ["compute", "--in", "/nonexistent.g6", "--what", "D"],
    ],
)
def test_usage_errors(tmp_path, argv):
    assert main(argv) == 2


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as info:
        main(["compute", "--what", "nonsense"])
    assert info.value.code == 2


def test_verify_exit_status(tmp_path):
    out = tmp_path / "r.json"
    md = tmp_path / "r.md"
    assert main(["verify", "--claims", "L2.i,F3.P", "--max-n", "4", "--out", str(out), "--md", str(md)]) == 0
    assert main(["verify", "--claims", "T2.10", "--family-n", "5", "--out", str(out)]) == 1
    assert "T2.10" in json.loads(out.read_text())["records"][0]["claim"]
    assert md.read_text().startswith("# Claim verification report")


def test_verify_c29(tmp_path):
    out = tmp_path / "r.json"
    assert main(["verify", "--claims", "C2.9", "--max-n", "7", "--out", str(out)]) == 0
    records = json.loads(out.read_text())["records"]
    assert len(records) == 2 + 6 + 21 + 112 + 853 and {r["verdict"] for r in records} == {"PASS"}


def test_module_entry_point(tmp_path):
    src = write(tmp_path, "c4.g6", cycle(4))
    proc = subprocess.run([sys.executable, "-m", "distpow", "compute", "--in", src, "--what", "aut"], capture_output=True, text=True)
    assert proc.returncode == 0 and '"value": 8' in proc.stdout
