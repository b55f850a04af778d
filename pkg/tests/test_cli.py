"""Command-line behaviour: examples, exit codes, envelopes and golden text."""

import csv
import io
import json
from pathlib import Path

import pytest

from apdecomp import __version__
from apdecomp.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    return json.loads(out)


def golden_name(argv):
    return "_".join(a.replace(",", "_") for a in argv).replace("-", "") + ".txt"


GOLDEN_COMMANDS = [
    ("find", "31"),
    ("find", "104", "--four"),
    ("find", "71"),
    ("lift", "55", "5", "--gens", "54,1,3"),
    ("lift", "7", "7", "--alpha", "3"),
    ("gf", "11", "2"),
    ("gf", "19", "3"),
    ("table", "3", "--diff-paper"),
    ("table", "D"),
    ("table", "thm-4.4", "--diff-paper"),
]


@pytest.mark.parametrize("argv", GOLDEN_COMMANDS, ids=" ".join)
def test_text_matches_golden_file(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == (GOLDEN / golden_name(argv)).read_text()


def test_find_31_contains_printed_triple(capsys):
    env = run_json(capsys, "find", "31")
    gens = [tuple(d["generators"]) for d in env["result"]]
    assert (30, 2, 5) in gens


def test_find_104_four(capsys):
    env = run_json(capsys, "find", "104", "--four")
    assert len(env["result"]) == 2
    assert all(d["strength"] == "strong" for d in env["result"])


def test_find_71_empty_exit_zero(capsys):
    code, out, _ = run(capsys, "find", "71")
    assert code == 0
    assert out.strip() == "0 decomposition(s)"


def test_lift_55_5_eight_lifts(capsys):
    env = run_json(capsys, "lift", "55", "5", "--gens", "54,1,3")
    (rep,) = env["result"]
    tags = [d["strength"] for d in rep["results"]]
    assert len(tags) == 8 and tags.count("strong") == 4 and tags.count("weak") == 4


def test_lift_prime_power(capsys):
    env = run_json(capsys, "lift", "7", "7", "--alpha", "3")
    lifts = [r["lift"] for r in env["result"] if r["lift"]]
    assert any(d["n"] == 343 for d in lifts)


def test_lift_379_unproductive(capsys):
    env = run_json(capsys, "lift", "379", "379")
    bad = [r for r in env["result"] if r["productive"] is False]
    assert len(bad) == 1
    assert bad[0]["source"]["generators"] == [239, 378, 138]
    assert bad[0]["results"] == []
    assert len(bad[0]["special_lifts"]) == 3


def test_gf_11_2(capsys):
    env = run_json(capsys, "gf", "11", "2")
    assert env["result"]["field"] == "GF(11^2)"
    assert env["result"]["decompositions"]


def test_gf_19_3_orders(capsys):
    env = run_json(capsys, "gf", "19", "3")
    orders = {tuple(sorted(d["orders"])) for d in env["result"]["decompositions"]}
    assert (2, 27, 127) in orders


def test_table_3_sixteen_printed_rows(capsys):
    env = run_json(capsys, "table", "3", "--diff-paper")
    rows = env["result"]["rows"]
    assert len([r for r in rows if r["n"] != 833]) == 16
    assert env["result"]["diffs"] == ["n=833=17*7^2: extra row (6, 3, 3, 0) not printed"]


def test_table_without_diff_flag_omits_diffs(capsys):
    env = run_json(capsys, "table", "D")
    assert "diffs" not in env["result"] and "errata" not in env["result"]


@pytest.mark.parametrize("argv,code", [
    (["find", "0"], 1),
    (["find", "abc"], 1),
    (["nonsense"], 1),
    ([], 1),
    (["table", "D", "--limit", "50"], 0),
    (["table", "gf", "--limit", "50"], 1),
    (["find", "31", "--threads", "0"], 1),
    (["gf", "2", "8"], 2),
    (["gf", "12"], 1),
    (["lift", "31", "4"], 2),
    (["lift", "31", "2"], 2),
    (["lift", "31", "5", "--alpha", "2"], 2),
    (["lift", "31", "5", "--gens", "1,2,3"], 1),
])
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_invariant_violation_exit_three(capsys, monkeypatch):
    from apdecomp import cli
    from apdecomp.theorems import InvariantViolation

    def boom(*a, **k):
        raise InvariantViolation("classification failed")

    monkeypatch.setattr(cli, "find_3ap", boom)
    code, _, err = run(capsys, "find", "31")
    assert code == 3 and "invariant" in err


def test_envelope_fields(capsys):
    env = run_json(capsys, "find", "31")
    assert set(env) == {"command", "parameters", "result", "runtime", "version"}
    assert env["command"] == "find"
    assert env["parameters"] == {"n": 31, "weak": False, "four": False}
    assert env["runtime"] is None
    assert env["version"] == __version__
    assert json.loads(json.dumps(env)) == env


def test_timing_flag_sets_runtime(capsys):
    env = run_json(capsys, "find", "31", "--timing")
    assert isinstance(env["runtime"], float)


@pytest.mark.parametrize("argv", [("find", "91", "--weak"), ("gf", "13", "2"), ("table", "quartets")])
def test_deterministic(capsys, argv):
    for fmt in ("text", "json", "csv"):
        a = run(capsys, *argv, "--format", fmt)
        b = run(capsys, *argv, "--format", fmt)
        assert a == b


def test_threads_do_not_change_output(capsys):
    a = run(capsys, "find", "1729", "--format", "json")
    b = run(capsys, "find", "1729", "--format", "json", "--threads", "3")
    assert a == b


def test_json_and_text_agree(capsys):
    env = run_json(capsys, "find", "91", "--weak")
    _, text, _ = run(capsys, "find", "91", "--weak")
    lines = text.splitlines()[:-1]
    assert len(lines) == len(env["result"])
    for line, d in zip(lines, env["result"]):
        assert line.startswith(f"U_{d['n']} = ")
        parts = line.split(" = ")[1].split("  ")[0].split(" x ")
        assert parts == [f"<{g}>_{o}" for g, o in zip(d["generators"], d["orders"])]


def test_csv_and_json_agree(capsys):
    env = run_json(capsys, "find", "91", "--weak")
    _, out, _ = run(capsys, "find", "91", "--weak", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["generators"] for r in rows] == [" ".join(map(str, d["generators"])) for d in env["result"]]


def test_generators_reduced(capsys):
    env = run_json(capsys, "find", "91", "--weak")
    for d in env["result"]:
        assert all(1 <= g <= 90 for g in d["generators"])


def test_coverage_limit_counts(capsys):
    code, out, _ = run(capsys, "table", "coverage-2.1", "--limit", "100000")
    assert code == 0
    assert "1614 primes" in out and "494 satisfy" in out
