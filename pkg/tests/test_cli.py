import json
import subprocess
import sys

import pytest

from clustercone.cli import main
from clustercone.cones import Cone, cones_equal
from clustercone.groebner.cone import groebner_cone
from clustercone.polygon import ModelSpec, PolygonModel


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cone_a1_text(capsys):
    code, out, _ = run(capsys, "cone", "--family", "A", "--rank", "1")
    assert code == 0
    assert "coordinates: [1,3] [2,4] [1,2] [2,3] [3,4] [1,4]" in out
    assert "rays (2):" in out and "lineality (4):" in out
    assert "v([1,2]) = (0,0,-1,0,0,0)" in out


@pytest.mark.parametrize("family,rank,frozen", [("A", 1, "special"), ("B", 3, "none"), ("D", 4, "special")])
def test_cone_json_round_trip(capsys, family, rank, frozen):
    code, out, _ = run(capsys, "cone", "--family", family, "--rank", str(rank), "--frozen", frozen, "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["family"] == family and data["rank"] == rank and data["frozen_mode"] == frozen
    dim = len(data["variables"])
    rebuilt = Cone.from_generators(dim, [tuple(r) for r in data["rays"]], [tuple(v) for v in data["lineality"]])
    direct = groebner_cone(PolygonModel(ModelSpec(family, rank, frozen)))
    assert cones_equal(rebuilt, direct)
    assert sorted(map(tuple, data["rays"])) == sorted(direct.rays)
    kinds = {v["kind"] for v in data["variables"]}
    assert kinds == ({"cluster", "frozen"} if frozen == "special" else {"cluster"})


def test_variables_and_relations(capsys):
    code, out, _ = run(capsys, "variables", "--family", "A", "--rank", "2", "--format", "json")
    assert code == 0 and len(json.loads(out)["variables"]) == 10
    code, out, _ = run(capsys, "relations", "--family", "A", "--rank", "3", "--primitive-only", "--format", "json")
    assert code == 0
    code, out, _ = run(capsys, "compat", "--family", "G", "--rank", "2")
    assert code == 0 and out.strip()


def test_verify_single_and_all(capsys):
    code, out, _ = run(capsys, "verify", "--check", "equality", "--family", "G", "--rank", "2")
    assert code == 0 and "[PASS]" in out
    code, out, _ = run(capsys, "verify", "--family", "D", "--rank", "4", "--frozen", "none")
    assert code == 0 and "[SKIP]" in out and "[FAIL]" not in out


def test_coxeter_option(capsys):
    code, _, _ = run(capsys, "verify", "--check", "equality", "--family", "B", "--rank", "3", "--model", "root", "--coxeter", "3,1,2")
    assert code == 0


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--check", "result2", "--family", "D", "--rank", "4"],
        ["cone", "--family", "E", "--rank", "7"],
        ["cone", "--family", "A", "--rank", "2", "--model", "root", "--frozen", "special"],
        ["cone", "--family", "D", "--rank", "3"],
        ["cone", "--family", "A", "--rank", "2", "--model", "root", "--coxeter", "1,1"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    assert main(argv) == 2
    assert capsys.readouterr().err


def test_module_entry_point(tmp_path):
    out = tmp_path / "a2.json"
    proc = subprocess.run(
        [sys.executable, "-m", "clustercone", "cone", "--family", "A", "--rank", "2", "--format", "json", "--out", str(out)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0, proc.stderr
    assert json.loads(out.read_text())["rank"] == 2
