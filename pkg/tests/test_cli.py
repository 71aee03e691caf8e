import json
import subprocess
import sys

import pytest

from adereduce import MPoly, ProductType, __version__
from adereduce.__main__ import DEFAULT_MAX_RANK, main


def test_cli_version():
    cmd = [sys.executable, "-m", "adereduce", "--version"]
    assert subprocess.check_output(cmd).decode().strip() == __version__


def run(capsys, *args: str) -> str:
    main(list(args))
    return capsys.readouterr().out


def fails(capsys, *args: str) -> str:
    with pytest.raises(SystemExit) as cm:
        main(list(args))
    assert 2 == cm.value.code
    return capsys.readouterr().err


def test_info(capsys) -> None:
    out = run(capsys, "info", "E6")
    assert "E6: rank 6, 72 roots, |W| = 51840" in out
    assert "E6: h = 12, exponents 1,4,5,7,8,11" in out


def test_info_json(capsys) -> None:
    doc = json.loads(run(capsys, "info", "A2,A1", "--json"))
    assert "A1,A2" == doc["type"]
    assert 12 == doc["weyl_group_order"]
    assert [2, 3] == [f["coxeter_number"] for f in doc["factors"]]


def test_strata(capsys) -> None:
    doc = json.loads(run(capsys, "strata", "E6", "--codim", "5", "--json"))
    assert [("D5", 27), ("A5", 36), ("A1,A4", 216), ("A1,A2,A2", 360)] == [
        (s["type"], s["orbit_size"]) for s in doc["strata"]
    ]
    assert "precisely two cusps and one node" == doc["strata"][-1]["fiber"]


def test_strata_table(capsys) -> None:
    out = run(capsys, "strata", "A2")
    assert "Type | Codim | Orbits | Count\nA1   | 1     | 1      | 3\n" in out


def test_divisors(capsys) -> None:
    doc = json.loads(run(capsys, "divisors", "E6", "--json"))
    assert {
        "A1": 36,
        "A2": 120,
        "A3": 270,
        "A4": 216,
        "D4": 45,
        "A5": 36,
        "D5": 27,
        "E6": 1,
    } == {d["type"]: d["count"] for d in doc["divisors"]}
    out = run(capsys, "divisors", "A3")
    assert "A3   | 1" in out
    assert "  dim 1: A2" in out


def test_monodromy(capsys) -> None:
    out = run(capsys, "monodromy", "A2", "--dim", "1")
    assert "not unipotent; square unipotent; stack ℤ/2 required" in out
    rows = json.loads(run(capsys, "monodromy", "A1,A2,E6", "--dim", "2", "--json"))
    assert [False, False, False] == [row["needs_stack"] for row in rows]


def test_an_reduce(capsys) -> None:
    doc = json.loads(run(capsys, "an-reduce", "3", "--json"))
    assert ["b1^2", "b1*x1", "x1^2", "x2"] == doc["ideal"]
    assert "char(k) > 4" == doc["characteristic"]
    out = run(capsys, "an-reduce", "2", "--m", "3")
    assert "Base change: b1 = c1^2, b2 = c2, b3 = c3" in out
    assert "Desingularization: (x1^3, x2^2, x2*x3, x3^2)" in out


def test_curve(capsys) -> None:
    doc = json.loads(run(capsys, "curve", "--genus", "3", "--sing", "A2,A1", "--json"))
    assert "B_A1 × B_A2 × 𝔸^m" == doc["deformation"]["base"]
    assert ["A2"] == doc["report"]["stack_loci"]


def test_curve_below_genus_two_warns_on_stderr(capsys) -> None:
    main(["curve", "--genus", "1", "--sing", "A2"])
    captured = capsys.readouterr()
    assert "Stack loci: A2" in captured.out
    assert "adereduce: warning: genus 1 is below 2" in captured.err


def test_artin(capsys) -> None:
    out = run(capsys, "artin", "A3")
    assert "Π = t1 t2 t3 ↦ length 3, order 4" in out
    assert "half loop conjugate to longest: yes" in out
    doc = json.loads(run(capsys, "artin", "A2", "--word", "t1 t2 t1^-1", "--json"))
    (word,) = doc["words"]
    # s1 s2 s1 is the reflection in the highest root
    assert 3 == word["weyl_length"]
    assert 2 == word["weyl_order"]
    assert doc["checks"] is None


def test_rank_guard(capsys) -> None:
    assert 7 == DEFAULT_MAX_RANK
    assert "rank above 7 needs --force" in fails(capsys, "strata", "E8")
    assert "also needs --codim" in fails(capsys, "divisors", "E8", "--force")
    doc = json.loads(
        run(capsys, "strata", "E8", "--force", "--codim", "1", "--json")
    )
    assert [{"type": "A1", "codim": 1, "orbit_size": 120, "flat_count": 120}] == [
        {k: v for k, v in s.items() if k != "fiber"} for s in doc["strata"]
    ]


@pytest.mark.parametrize(
    "args",
    [
        ["info", "F4"],
        ["an-reduce", "0"],
        ["an-reduce", "3", "--chart", "even"],
        ["curve", "--genus", "2", "--sing", "A1", "--depth", "0"],
        ["artin", "A2", "--word", "t9"],
        ["strata", "A3", "--codim", "4"],
    ],
)
def test_errors_exit_with_two(capsys, args) -> None:
    assert "adereduce: error: " in fails(capsys, *args)


def test_usage_errors_exit_with_two(capsys) -> None:
    fails(capsys, "an-reduce", "3", "--chart", "sideways")
    fails(capsys)


@pytest.mark.parametrize(
    "args",
    [
        ["strata", "E6", "--codim", "3"],
        ["divisors", "D5", "--json"],
        ["monodromy", "A1,A2,D4", "--dim", "1"],
        ["an-reduce", "4", "--json"],
        ["curve", "--genus", "4", "--sing", "A3,A2,A1"],
        ["artin", "D4", "--json"],
    ],
)
def test_output_is_reproducible(args) -> None:
    cmd = [sys.executable, "-m", "adereduce", *args]
    assert subprocess.check_output(cmd) == subprocess.check_output(cmd)


def test_json_types_parse_back(capsys) -> None:
    strata = json.loads(run(capsys, "strata", "E6", "--json"))["strata"]
    divisors = json.loads(run(capsys, "divisors", "E6", "--json"))["divisors"]
    for record in strata + divisors:
        assert record["type"] == str(ProductType.parse(record["type"]))


def test_json_polynomials_parse_back(capsys) -> None:
    doc = json.loads(run(capsys, "an-reduce", "5", "--m", "3", "--json"))
    texts = doc["ideal"] + doc["base_relations"] + doc["total_relations"]
    texts += doc["desingularization"]["ideal"]
    texts += list(doc["cover"].values()) + list(doc["weyl_cover"].values())
    for text in texts:
        assert text == str(MPoly.parse(text))
