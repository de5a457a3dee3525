import io
import json
import logging
import os
import subprocess
import sys

import pytest

from ydnichols import cli
from ydnichols.cache import CACHE_ENV, TruncationCache
from ydnichols.report import Report


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def e1(inputs_dir):
    return os.path.join(inputs_dir, "e1.toml")


@pytest.fixture
def e0(inputs_dir):
    return os.path.join(inputs_dir, "e0.toml")


def test_dims_document(e0):
    code, text = run("dims", "--input", e0)
    assert code == 0
    doc = json.loads(text)
    assert doc["command"] == "dims" and doc["cutoff"] == 3
    assert doc["results"]["dims"] == [1, 2, 1, 0]
    assert doc["reports"] == [] and doc["passed"]
    assert "time" not in text


def test_dims_text(e1):
    code, text = run("dims", "--input", e1, "--emit", "text")
    assert code == 0
    assert "dim        1    2    2    2    1" in text


@pytest.mark.parametrize("command", cli.COMMANDS)
def test_every_command_passes_on_e1(command, e1):
    code, text = run(command, "--input", e1)
    doc = json.loads(text)
    assert code == 0, text
    assert doc["passed"]


def test_reflect_reports_cartan_row(e1):
    code, text = run("reflect", "--input", e1, "--pivot", "2")
    doc = json.loads(text)
    assert doc["pivot"] == 2
    assert doc["results"]["cartan_row"] == [-1, 2]


def test_weyl_adjacency_lines(e1):
    doc = json.loads(run("weyl", "--input", e1)[1])
    lines = doc["results"]["adjacency"]
    assert len(lines) == 12
    s, p, t, row = lines[0].split()
    assert (s, p, row) == ("0", "1", "2,-1")


def test_exit_code_input_error(tmp_path):
    bad = tmp_path / "bad.toml"
    bad.write_text("[diagonal]\nq = [[\"x\"]]\n")
    code, text = run("dims", "--input", str(bad))
    assert code == 2
    assert json.loads(text)["error"].startswith("diagonal.q[1][1]")
    assert run("dims", "--input", str(tmp_path / "nope.toml"))[0] == 2
    assert run("reflect", "--input", str(bad).replace("bad", "nope"), "--pivot", "3")[0] == 2


def test_exit_code_bad_pivot_and_cutoff(e1):
    assert run("reflect", "--input", e1, "--pivot", "3")[0] == 2
    assert run("dims", "--input", e1, "--cutoff", "0")[0] == 2


def test_exit_code_cutoff_insufficient(inputs_dir):
    code, text = run("reflect", "--input", os.path.join(inputs_dir, "a2_z3.toml"), "--cutoff", "2")
    assert code == 3
    doc = json.loads(text)
    assert doc["error_kind"] == "cutoff" and doc["degree_reached"] == 2


def test_exit_code_verification_failure(e1, monkeypatch):
    def failing(ctx):
        rep = Report("forced")
        rep.add("always fails", False, "by construction")
        return {}, [rep]

    monkeypatch.setitem(cli.HANDLERS, "dims", failing)
    code, text = run("dims", "--input", e1)
    assert code == 1
    assert json.loads(text)["reports"][0]["checks"][0]["counterexample"] == "by construction"


def test_cache_warm_run_is_identical(e1, tmp_path):
    cold = run("verify-ntn", "--input", e1, "--cache-dir", str(tmp_path))
    files = os.listdir(tmp_path)
    assert len(files) == 1 and files[0].endswith("-D4.json")
    warm = run("verify-ntn", "--input", e1, "--cache-dir", str(tmp_path))
    plain = run("verify-ntn", "--input", e1)
    assert cold == warm == plain


def test_cache_cutoff_raise_keeps_both(e1, tmp_path):
    run("dims", "--input", e1, "--cutoff", "3", "--cache-dir", str(tmp_path))
    run("dims", "--input", e1, "--cutoff", "4", "--cache-dir", str(tmp_path))
    names = sorted(os.listdir(tmp_path))
    assert len(names) == 2 and names[0].endswith("-D3.json") and names[1].endswith("-D4.json")


def test_cache_hash_changes_with_input(e0, e1, tmp_path):
    run("dims", "--input", e0, "--cutoff", "3", "--cache-dir", str(tmp_path))
    run("dims", "--input", e1, "--cutoff", "3", "--cache-dir", str(tmp_path))
    assert len(os.listdir(tmp_path)) == 2


def test_corrupt_entry_is_evicted(e1, tmp_path, caplog, monkeypatch):
    monkeypatch.setenv(CACHE_ENV, str(tmp_path))
    first = run("dims", "--input", e1)
    (entry,) = os.listdir(tmp_path)
    path = tmp_path / entry
    doc = json.loads(path.read_text())
    doc["state"]["degrees"][2]["blocks"][0]["inverse"] = "broken"
    path.write_text(json.dumps(doc))
    with caplog.at_level(logging.WARNING):
        second = run("dims", "--input", e1)
    assert first == second
    assert any("corrupt" in r.message for r in caplog.records)
    assert json.loads(path.read_text())["state"]["degrees"][2]["blocks"][0]["inverse"] != "broken"


def test_cache_counts_hits(tmp_path):
    from oracles import diagonal_module

    c = TruncationCache(str(tmp_path))
    M = diagonal_module([[-1]])
    c.nichols("k", M, 3)
    c.nichols("k", M, 3)
    assert (c.misses, c.hits) == (1, 1)
    assert not [n for n in os.listdir(tmp_path) if n.startswith(".tmp")]


def test_console_script(e0):
    proc = subprocess.run(
        [sys.executable, "-m", "ydnichols.cli", "dims", "--input", e0, "--timing"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["results"]["dims"] == [1, 2, 1, 0]
    assert "dims:" in proc.stderr
