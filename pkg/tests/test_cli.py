from __future__ import annotations

import json
import subprocess
import sys

import pytest

from semisym.cli import main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_forge_psl2(tmp_path, capsys):
    target = tmp_path / "g.json"
    code, _, _ = run(["forge", "psl2", "--q", "11", "--out", str(target)], capsys)
    assert code == 0
    data = json.loads(target.read_text())
    assert data["order"] == 660 and data["degree"] == 12 and data["name"] == "PSL2(11)"
    assert not list(tmp_path.glob(".*tmp"))


def test_forge_named(capsys):
    code, out, _ = run(["forge", "named", "--name", "Sym(3)wrSym(3)"], capsys)
    assert code == 0 and json.loads(out)["order"] == 1296


@pytest.mark.parametrize("argv", [["forge", "psl2", "--bogus", "1"], ["forge", "psl2"], ["nonsense"],
                                  ["amalgam", "verify"], ["aut"], ["census", "run", "--tier", "huge"]])
def test_usage_errors_exit_2(argv, capsys):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 2


def test_missing_file_exit_2(tmp_path, capsys):
    code, _, err = run(["aut", "--graph", str(tmp_path / "none.json")], capsys)
    assert code == 2 and "error" in err


def test_gray_graph_aut(tmp_path, capsys):
    graph = tmp_path / "gray.json"
    assert run(["graph", "--type", "G2^3", "--out", str(graph)], capsys)[0] == 0
    assert json.loads(graph.read_text())["parts"] == [27, 27]
    code, out, _ = run(["aut", "--graph", str(graph)], capsys)
    data = json.loads(out)
    assert code == 0 and data["order"] == 1296 and data["symmetry"] == "Semisymmetric"


def test_outputs_are_byte_identical(tmp_path, capsys):
    outs = []
    for i in range(2):
        path = tmp_path / f"a{i}.json"
        main(["--seed", "0", "amalgam", "overgroups", "--named", "PSL2(11)", "--out", str(path)])
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]
    g1 = run(["graph", "--type", "G3", "--format", "dot"], capsys)[1]
    g2 = run(["graph", "--type", "G3", "--format", "dot"], capsys)[1]
    assert g1 == g2 and g1.startswith("graph")


def test_amalgam_subcommands(tmp_path, capsys):
    code, out, _ = run(["amalgam", "overgroups", "--named", "PSL2(11)"], capsys)
    found = json.loads(out)["amalgams"]
    assert code == 0 and {a["type"] for a in found} == {"G1^3", "G2"}
    path = tmp_path / "a.json"
    path.write_text(json.dumps(found[0]))
    code, out, _ = run(["amalgam", "verify", "--amalgam", str(path)], capsys)
    assert code == 0 and json.loads(out)["passed"]
    code, out, _ = run(["amalgam", "classify", "--amalgam", str(path)], capsys)
    assert json.loads(out)["type"] == found[0]["type"]
    code, out, _ = run(["amalgam", "subamalgam", "--type", "G2^4"], capsys)
    assert code == 0 and json.loads(out)["type"] == "G2"


def test_verify_failure_exit_1(tmp_path, capsys):
    # both members equal to a Sylow 2-subgroup: index 1, not 3
    data = json.loads(run(["amalgam", "overgroups", "--named", "PSL2(11)"], capsys)[1])["amalgams"][0]
    data["g2"] = data["g1"]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data))
    code, out, _ = run(["amalgam", "verify", "--amalgam", str(path)], capsys)
    assert code == 1 and not json.loads(out)["passed"]


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "semisym", "forge", "alt", "--n", "5"],
                         capture_output=True, text=True, check=True)
    assert json.loads(res.stdout)["order"] == 60


@pytest.mark.slow
def test_census_core_tier(tmp_path, capsys):
    report = tmp_path / "report.json"
    code, _, _ = run(["census", "run", "--tier", "core", "--json", str(report)], capsys)
    data = json.loads(report.read_text())
    assert code == 0
    assert data["summary"]["fail"] == 0 and data["summary"]["pass"] == len(data["cases"])
    assert data["cross_checks"]["biprimitive_auts"]["passed"]
