import json
import subprocess
import sys

import pytest
from conftest import WORKSPACES

from svnfilter.cli import FAILED, INPUT_ERROR, OK, main


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def ws(name):
    return WORKSPACES / name


def test_eval_prints_a_table(capsys):
    code, out, _ = run(capsys, "eval", ws("filter_base.json"), "F & G")
    assert code == OK
    assert out.splitlines()[1].split() == ["a", "0.4", "0.1", "0.3"]


def test_eval_predicate(capsys):
    assert run(capsys, "eval", ws("incomparable.json"), "A <= B")[:2] == (OK, "false\n")


def test_render(capsys):
    code, out, _ = run(capsys, "render", ws("complement.json"))
    assert code == OK and out.splitlines()[0].split() == ["A", "mu", "sigma", "nu"]


def test_check_base_reports_reasons(capsys):
    code, out, _ = run(capsys, "check-base", ws("filter_base.json"), "Family")
    assert code == FAILED
    assert "not a filter base" in out and "F ⊓ G" in out
    assert run(capsys, "check-base", ws("filter_base.json"), "BF")[0] == OK


def test_check_filter(capsys, tmp_path):
    code, out, _ = run(capsys, "check-filter", ws("filter_base.json"), "BF", "--k", "10")
    assert code == INPUT_ERROR  # three elements at k=10 exceed the point budget
    text = '{"universe": ["a"], "sets": {"T": {"a": ["1", "1", "0"]}, "E": {"a": ["0", "0", "1"]}},' \
           ' "bases": {"B": ["T"], "Z": ["E"]}}'
    path = tmp_path / "filter.json"
    path.write_text(text, encoding="utf-8")
    code, out, _ = run(capsys, "check-filter", path, "B")
    assert code == OK and "filter in the grade lattice with k=1" in out
    code, out, _ = run(capsys, "check-filter", path, "Z")
    assert code == FAILED and "empty set" in out


def test_filter_ops(capsys):
    code, out, _ = run(capsys, "filter-op", ws("filter_base.json"), "star", "BF")
    assert code == OK and out.startswith("F ")
    code, out, _ = run(capsys, "filter-op", ws("filter_base.json"), "join", "BF", "BG")
    assert code == OK and out.splitlines()[1].split() == ["a", "0.4", "0.1", "0.3"]
    code, out, _ = run(capsys, "filter-op", ws("filter_base.json"), "meet", "BF", "BG")
    assert code == OK and out.splitlines()[1].split() == ["a", "0.7", "0.3", "0.2"]
    code, out, _ = run(capsys, "filter-op", ws("filter_base.json"), "adjoin", "BF", "G")
    assert code == OK
    code, out, _ = run(capsys, "filter-op", ws("principal.json"), "contains", "PA", "B")
    assert (code, out) == (OK, "true\n")
    code, out, _ = run(capsys, "filter-op", ws("principal.json"), "contains", "PA", "Z")
    assert (code, out) == (OK, "false\n")
    assert run(capsys, "filter-op", ws("filter_base.json"), "contains", "Family", "W")[0] == INPUT_ERROR
    assert run(capsys, "filter-op", ws("filter_base.json"), "meet", "BF")[0] == INPUT_ERROR


def test_lattice_commands(capsys, tmp_path):
    code, out, _ = run(capsys, "lattice", "enumerate", "--n", "1", "--k", "1")
    assert code == OK and len(out.splitlines()) == 8
    doc = '{"universe": ["u1"], "sets": {"A": {"u1": ["0", "0", "0"]}, "T": {"u1": ["1", "1", "0"]}}}'
    path = tmp_path / "lattice.json"
    path.write_text(doc, encoding="utf-8")
    code, out, _ = run(capsys, "lattice", "ultrafilter", path, "A")
    assert code == OK and "is an ultrafilter" in out and "dichotomy: fails" in out
    code, out, _ = run(capsys, "lattice", "ultrafilter", path, "T")
    assert code == OK and "not an ultrafilter" in out
    code, out, _ = run(capsys, "lattice", "extend", path, "T")
    assert code == OK and "extended" in out
    assert run(capsys, "lattice", "ultrafilter", ws("principal.json"), "A")[0] == INPUT_ERROR
    assert run(capsys, "lattice", "extend")[0] == INPUT_ERROR


@pytest.mark.parametrize("argv", [
    ["render", "does-not-exist.json"],
    ["eval", str(WORKSPACES / "filter_base.json"), "F & G | H"],
    ["eval", str(WORKSPACES / "filter_base.json"), "Q"],
    ["check-base", str(WORKSPACES / "filter_base.json"), "nope"],
    ["verify", "no-such-claim"],
])
def test_input_errors_exit_two(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == INPUT_ERROR and err.startswith("error: ")


def test_bad_grade_document_exits_two(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"universe": ["a"], "sets": {"A": {"a": ["1.2", "0", "0"]}}}', encoding="utf-8")
    code, _, err = run(capsys, "render", p)
    assert code == INPUT_ERROR and "outside [0, 1]" in err


def test_verify_exit_codes(capsys):
    assert run(capsys, "verify", "complement-involution", "--samples", "50")[0] == OK
    assert run(capsys, "verify", "intersection-with-complement-empty", "--samples", "50")[0] == FAILED


def test_verify_table_and_jsonl(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "image-union-commutes", "--samples", "50", "--umax", "1", "--kmax", "1")
    header = out.splitlines()[0].split("  ")
    assert [h.strip() for h in header if h.strip()][:4] == ["group", "claim", "stance", "paper-inf or any"]
    assert "no counterexample within budget" in out
    target = tmp_path / "r.jsonl"
    code = main(["verify", "image-union-commutes", "--samples", "50", "--format", "jsonl", "--output", str(target)])
    records = [json.loads(line) for line in target.read_text(encoding="utf-8").splitlines()]
    assert [r["convention"] for r in records] == ["paper-inf", "standard-sup"]
    assert code == FAILED  # falsified under the fiber infimum


def test_verify_single_convention(capsys):
    code, out, _ = run(capsys, "verify", "image-union-commutes", "--samples", "50", "--convention", "standard-sup",
                       "--format", "jsonl")
    (rec,) = [json.loads(line) for line in out.splitlines()]
    assert rec["convention"] == "standard-sup" and code == OK


def test_console_script_entry_point(tmp_path):
    out1 = tmp_path / "one.jsonl"
    out2 = tmp_path / "two.jsonl"
    argv = ["verify", "demorgan-generalized", "star-equals-base-remark", "ultrafilter-dichotomy",
            "--samples", "300", "--seed", "7", "--kmax", "1", "--format", "jsonl"]
    for target in (out1, out2):
        proc = subprocess.run([sys.executable, "-m", "svnfilter", *argv, "--output", str(target)],
                              capture_output=True, text=True)
        assert proc.returncode == FAILED, proc.stderr
    assert out1.read_bytes() == out2.read_bytes()
