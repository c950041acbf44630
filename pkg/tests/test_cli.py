import json
import subprocess
import sys

import pytest

from crhecke.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_group_info_json(capsys):
    code, out, _ = run(capsys, "group", "info", "--spec", "g(4,1,2)", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["order"] == 32
    assert len(data["conjugacy_classes"]) == 14


def test_hecke_mul(capsys):
    code, out, _ = run(capsys, "hecke", "mul", "s", "s", "s")
    assert code == 0 and out.strip() == "`T[1] + xi1*T[s] + xi2*T[s^2]`"


def test_hecke_commutator_of_central_word(capsys):
    code, out, _ = run(capsys, "hecke", "commutator", "--gen", "t", "tststs")
    assert code == 0 and out.strip() == "[t] `0`"


def test_hecke_table_json(capsys):
    code, out, _ = run(capsys, "hecke", "table", "--spec", "g(3,1,2)", "--format", "json")
    assert code == 0 and json.loads(out)


def test_centre_md_has_seven_rows(capsys):
    code, out, _ = run(capsys, "centre", "--spec", "g4", "--format", "md")
    assert code == 0
    rows = [line for line in out.splitlines() if line[:3] in {f"| {k}" for k in range(1, 8)}]
    assert len(rows) == 7


def test_centralizer_distinguished_options(capsys):
    for choice in ("auto", "printed", "minimal"):
        code, _, _ = run(capsys, "centralizer", "--gen", "s", "--format", "json", "--distinguished", choice)
        assert code == 0


def test_dcoset_graph_dot(capsys):
    code, out, _ = run(capsys, "dcoset-graph", "--spec", "g(4,1,2)", "--gen", "s", "--format", "dot", "--reduce")
    assert code == 0 and out.startswith("digraph") and out.count("->") == 6


def test_specialize(capsys):
    code, out, _ = run(capsys, "specialize", "s", "s", "s")
    assert code == 0 and out.strip() == "1"


def test_specialize_element_file(capsys, tmp_path):
    code, out, _ = run(capsys, "hecke", "mul", "--format", "json", "t", "s", "s")
    path = tmp_path / "x.json"
    path.write_text(out)
    code, out, _ = run(capsys, "specialize", "--element", str(path), "--format", "json")
    assert code == 0 and json.loads(out)["element"] == {"ts^2": 1}


@pytest.mark.parametrize("suite", ["g4", "g412"])
def test_verify_paper(capsys, suite):
    code, out, _ = run(capsys, "verify-paper", "--suite", suite)
    assert code == 0
    assert " 0 fail" in out.splitlines()[-1]


def test_output_file(capsys, tmp_path):
    path = tmp_path / "out.txt"
    code, out, _ = run(capsys, "hecke", "mul", "s", "t", "-o", str(path))
    assert code == 0 and out == "" and path.read_text().strip() == "`T[st]`"


@pytest.mark.parametrize(
    "argv, flag",
    [
        (["centralizer", "--gen", "u"], "--gen"),
        (["group", "info", "--spec", "g5"], "--spec"),
        (["centre", "--spec", "g(4,1,3)"], "--spec"),
        (["hecke", "mul", "sx"], "WORD"),
        (["dcoset-graph", "--format", "tex"], "--format"),
    ],
)
def test_usage_errors(capsys, argv, flag):
    code, _, err = run(capsys, *argv)
    assert code == 2 and flag in err


def test_bad_distinguished_set_exits_one(capsys):
    code, _, err = run(capsys, "centre", "--distinguished", "1,s,t,ts,t^2s,t^2s^2,tststs")
    assert code == 1 and err


def test_missing_subcommand():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_module_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "crhecke", "centre", "--spec", "g(4,1,2)", "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and json.loads(first)
