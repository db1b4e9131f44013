import json
import subprocess
import sys

import pytest

from rbhopf.cli import main
from rbhopf.textio import import_structured, parse_lincomb


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


def test_eval(capsys):
    assert run(capsys, "eval", "P(1)*P(1)", "--weight", "symbolic")[:2] == (0, "lambda*P(1) + 2*P(P(1))")
    assert run(capsys, "eval", "x*y")[:2] == (0, "x*y")
    assert run(capsys, "eval", "P(1)*P(1)", "--weight", "0")[:2] == (0, "2*P(P(1))")


def test_eval_errors(capsys):
    code, _, err = run(capsys, "eval", "P(")
    assert code == 2 and "offset 2" in err
    assert run(capsys, "eval", "cop(x)")[0] == 2
    assert run(capsys, "eval", "x z", "--alphabet", "x,y")[0] == 2


def test_cop(capsys):
    assert run(capsys, "cop", "P(1)")[:2] == (0, "P(1) (x) 1 + 1 (x) P(1)")
    assert run(capsys, "cop", "1")[:2] == (0, "1 (x) 1")
    code, out, _ = run(capsys, "cop", "P(1) x P(1)", "--alphabet", "x")
    assert code == 0 and out.count(" (x) ") == 10
    assert "2*P(P(1)) (x) x" in out and "lambda*P(1) (x) x" in out


def test_antipode(capsys):
    assert run(capsys, "S", "x", "--weight", "0")[:2] == (0, "-x")
    assert run(capsys, "S", "P(x)", "--weight", "0")[:2] == (0, "-P(x) + x*P(1)")
    code, _, err = run(capsys, "S", "x", "--weight", "symbolic")
    assert code == 2 and "open problem" in err


def test_check(capsys):
    code, out, _ = run(capsys, "check", "--law", "rb", "--alphabet", "x", "--max-degree", "3")
    assert code == 0 and out.endswith("all pass")
    code, out, _ = run(capsys, "check", "--law", "antipode", "--alphabet", "x",
                       "--max-degree", "4", "--weight", "0")
    assert code == 0 and "antipode: 64/64 passed" in out
    code, out, _ = run(capsys, "check", "--law", "counterexample")
    assert code == 0 and out.count("cograding VIOLATION") == 2


@pytest.mark.parametrize("law", ["assoc", "unit", "coassoc", "counit", "bialgebra"])
def test_other_laws(capsys, law):
    assert run(capsys, "check", "--law", law, "--alphabet", "x,y", "--max-degree", "2")[0] == 0


def test_check_config_errors(capsys):
    assert run(capsys, "check", "--law", "rb")[0] == 2
    assert run(capsys, "check", "--law", "grading", "--alphabet", "x")[0] == 2
    assert run(capsys, "check", "--law", "grading", "--alphabet", "x", "--weight", "0")[0] == 0
    with pytest.raises(SystemExit) as err:
        main(["check", "--law", "nope", "--alphabet", "x"])
    assert err.value.code == 2


def test_enum(capsys):
    assert run(capsys, "enum", "--alphabet", "x", "--max-degree", "1", "--count")[1] == "0:1 1:2"
    assert run(capsys, "enum", "--alphabet", "x", "--max-degree", "2", "--count")[1] == "0:1 1:2 2:5"
    assert run(capsys, "enum", "--alphabet", "x", "--max-degree", "0")[1] == "1"


def test_json_output(capsys):
    _, out, _ = run(capsys, "eval", "P(1) P(1)", "--output", "json")
    assert import_structured(out) == parse_lincomb("P(1) P(1)")
    _, out, _ = run(capsys, "check", "--law", "counterexample", "--output", "json")
    doc = json.loads(out)
    assert doc["passed"] and doc["reports"][0]["violation_count"] == 3
    assert doc["reports"][1]["violation_count"] == 0
    _, out, _ = run(capsys, "enum", "--alphabet", "x", "--max-degree", "2", "--count", "--output", "json")
    assert json.loads(out) == {"counts": {"0": 1, "1": 2, "2": 5}}


def test_deterministic_subprocess():
    cmd = [sys.executable, "-m", "rbhopf.cli", "cop", "P(1) x P(1)"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first
