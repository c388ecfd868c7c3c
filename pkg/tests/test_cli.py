import json

import pytest

from hyperschur.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_objects(capsys):
    code, out, _ = run(capsys, "objects", "--n", "2")
    assert code == 0 and out.split() == ["(4)", "(1,2,1)", "(2,0,2)", "(1,1,0,1,1)"]
    assert len(run(capsys, "objects", "--n", "1")[1].split()) == 2
    assert len(run(capsys, "objects", "--n", "4", "--mode", "plain")[1].split()) == 8


def test_objects_bad_n(capsys):
    assert run(capsys, "objects", "--n", "0")[0] == 2


def test_usage_error_from_argparse(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["objects"])
    assert exc.value.code == 2


def test_basis(capsys):
    code, out, _ = run(capsys, "basis", "--target", "(1,2,1)", "--source", "(1,2,1)")
    assert code == 0 and out.splitlines()[0].startswith("3 basis")
    code, out, _ = run(capsys, "basis", "--target", "(4)", "--source", "(4)", "--json")
    assert json.loads(out)["count"] == 1
    code, out, _ = run(capsys, "basis", "--target", "(2,0,2)", "--source", "(1,2,1)")
    assert out.splitlines()[0].startswith("2 basis")
    assert run(capsys, "basis", "--target", "(4)", "--source", "(6)")[0] == 2
    assert run(capsys, "basis", "--target", "(1,2)", "--source", "(3)")[0] == 2


def test_compose(capsys):
    e3 = "[[0,1,0],[1,0,1],[0,1,0]]"
    code, out, _ = run(capsys, "compose", e3, e3, "--oracle")
    assert code == 0
    assert out.splitlines()[0] == "2*[[0,0,1],[0,2,0],[1,0,0]] + 2*[[1,0,0],[0,2,0],[0,0,1]]"
    code, out, _ = run(capsys, "compose", "[[1,1],[1,1]]", "[[1,1],[1,1]]", "--mode", "plain")
    assert out.strip() == "4*[[0,2],[2,0]] + 2*[[1,1],[1,1]] + 4*[[2,0],[0,2]]"
    ident = "[[1,0,0],[0,2,0],[0,0,1]]"
    assert run(capsys, "compose", ident, e3)[1].strip() == e3
    assert run(capsys, "compose", "[[4]]", e3)[0] == 2


def test_eval_and_normalize(capsys):
    assert run(capsys, "eval", "[S(3,6)];[M(3,6)]")[1].strip() == "160*[[12]]"
    code, out, _ = run(capsys, "eval", "[S(3,6)];[M(3,6)]", "--json")
    assert json.loads(out)["terms"] == [{"coefficient": 160, "matrix": [[12]]}]
    d3 = "[s(1,1),s(1,1)] ; [id(1),x(1,1),id(1)] ; [m(1,1),m(1,1)]"
    code, out, _ = run(capsys, "normalize", f"{d3} ; {d3}", "--mode", "plain")
    assert code == 0 and out.count("+") == 2 and "2*" + d3 in out
    assert run(capsys, "normalize", d3, "--mode", "plain")[1].strip() == d3
    code, _, err = run(capsys, "eval", "[m(1,1)")
    assert code == 2 and "offset" in err


def test_verify(capsys):
    assert run(capsys, "verify", "--suite", "defining", "--max-degree", "6")[0] == 0
    assert run(capsys, "verify", "--suite", "numeric", "--bound", "20")[0] == 0
    assert run(capsys, "verify", "--suite", "functor", "--n", "2")[0] == 0
    code, out, _ = run(capsys, "verify", "--suite", "numeric", "--json", "--timestamp", "T")
    doc = json.loads(out)
    assert doc["timestamp"] == "T" and doc["summary"]["failed"] == 0
    again = run(capsys, "verify", "--suite", "numeric", "--json", "--timestamp", "T")[1]
    assert again == out


def test_verify_oracle_seeded(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "oracle", "--samples", "20", "--seed", "3", "--json", "--timestamp", "T")
    assert code == 0
    assert out == run(capsys, "verify", "--suite", "oracle", "--samples", "20", "--seed", "3", "--json", "--timestamp", "T")[1]
