import json
import subprocess
import sys

import pytest

from conftest import all_trees
from ecctree.cli import main
from ecctree.tree_core import has_perfect_matching, parse_forest


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, "--json", *argv)
    return code, json.loads(out), err


def test_compute_families(capsys):
    assert run_json(capsys, "compute", "--family", "path", "--n", "11")[1]["xi_c"] == 150
    code, doc, _ = run_json(capsys, "compute", "--family", "broom", "--n", "11", "--delta", "6")
    assert (code, doc["xi_c"], doc["radius"], doc["diameter"]) == (0, 98, 3, 6)
    doc = run_json(capsys, "compute", "--family", "starlike", "--legs", "2,2,2", "--oracle")[1]
    assert doc["xi_c"] == 36 and doc["agree"] is True
    doc = run_json(capsys, "compute", "--family", "diameter_tree", "--n", "5", "--d", "3", "--at-floor", "1")[1]
    assert doc["xi_c"] == 19


def test_compute_file_and_profile(capsys, tmp_path):
    f = tmp_path / "p2.txt"
    f.write_text("2\n0 1\n")
    code, doc, _ = run_json(capsys, "compute", "--file", str(f), "--profile")
    assert (code, doc["xi_c"], doc["ecc"], doc["deg"]) == (0, 2, [1, 1], [1, 1])
    code, out, _ = run(capsys, "compute", "--file", str(f))
    assert code == 0 and "xi_c = 2" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["compute", "--family", "broom", "--n", "11"],
        ["compute", "--family", "broom", "--n", "11", "--delta", "11"],
        ["compute"],
        ["compute", "--family", "path", "--n", "4", "--file", "x"],
        ["compute", "--file", "/nonexistent/tree.txt"],
        ["enum", "--n", "30", "--count-only"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err.startswith("error:")


def test_bad_file_exit_2(capsys, tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("4\n0 1\n1 2\n1 3\n2 3\n")
    code, _, err = run(capsys, "compute", "--file", str(f))
    assert code == 2 and "3 edges" in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["enum"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["verify", "--claim", "thm-bogus"])
    assert info.value.code == 2


def test_enum(capsys, tmp_path):
    assert run(capsys, "enum", "--n", "7", "--count-only")[1].strip() == "11"
    assert run(capsys, "enum", "--n", "11", "--max-deg", "2", "--count-only")[1].strip() == "1"
    expected = sum(has_perfect_matching(t) for t in all_trees(8))
    assert run(capsys, "enum", "--n", "8", "--perfect-matching", "--count-only")[1].strip() == str(expected)
    out = tmp_path / "trees.txt"
    code, doc, _ = run_json(capsys, "enum", "--n", "6", "--emit", str(out), "--count-only")
    assert (code, doc["count"]) == (0, 6)
    text = out.read_text()
    assert len(parse_forest(text)) == 6 and "\n\n\n" not in text
    doc = run_json(capsys, "enum", "--n", "5")[1]
    assert len(doc["trees"]) == doc["count"] == 3


def test_extremal(capsys):
    code, doc, _ = run_json(capsys, "extremal", "--n", "16", "--max-deg", "3", "--objective", "min")
    assert (code, doc["value"], doc["count"]) == (0, 141, 10)
    doc = run_json(capsys, "extremal", "--n", "12", "--max-deg", "11", "--objective", "min")[1]
    assert (doc["value"], doc["count"]) == (33, 1)
    doc = run_json(capsys, "extremal", "--n", "10", "--max-deg", "4", "--objective", "max", "--witnesses", "1")[1]
    assert doc["count"] == 1
    code, out, err = run(capsys, "extremal", "--n", "6", "--max-deg", "9", "--objective", "min")
    assert code == 3 and "error" in err


def test_extremal_threads_identical(capsys):
    argv = ["extremal", "--n", "13", "--max-deg", "5", "--objective", "min"]
    one = run(capsys, "--json", *argv)[1]
    two = run(capsys, "--json", *argv, "--threads", "2")[1]
    assert one == two


def test_verify(capsys):
    code, doc, _ = run_json(capsys, "verify", "--claim", "cor-radius", "--max-n", "8")
    assert code == 0 and doc["verdicts"][0]["status"] == "ERRATUM"
    code, _, _ = run(capsys, "verify", "--claim", "cor-radius", "--max-n", "8", "--expect-errata", "")
    assert code == 1
    code, out, _ = run(capsys, "verify", "--claim", "all", "--max-n", "12")
    assert code == 0 and "FAIL 0" in out


def test_bench(capsys):
    code, doc, _ = run_json(capsys, "bench", "--family", "broom", "--n", "2000", "--compare-oracle")
    assert code == 0 and doc["agree"] is True and doc["oracle_seconds"] > doc["median_seconds"]
    code, _, err = run(capsys, "bench", "--family", "path", "--n", "5000", "--compare-oracle")
    assert code == 2 and "4000" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "ecctree", "compute", "--family", "path", "--n", "11", "--json"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["xi_c"] == 150
