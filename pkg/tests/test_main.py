"""
Tests for the command line
"""
import json

import pytest

from src.main import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_bracket(capsys):
    code, out, _ = run(capsys, "bracket", "e[1,2]", "f[-1,-2]")
    assert code == 0
    assert out == "q^-2*d\n"


def test_nf(capsys):
    code, out, _ = run(capsys, "nf", "f[1,0]*e[0,0]")
    assert code == 0
    assert out.strip() == "-g[1,0] + h[1,0] + e[0,0]*f[1,0]"


def test_delta(capsys):
    code, out, _ = run(capsys, "delta", "--case", "e", "--n", "0,1", "--x", "0,1", "--order", "2", "e[0,1]")
    assert code == 0
    assert out.strip() == "e[0,1]⊗1 + 1⊗e[0,1] - (e[0,1]⊗e[0,1]) t + O(t^3)"


def test_delta_closed_form_agrees(capsys):
    args = ("--case", "e", "--n", "0,1", "--x", "0,1", "--order", "2", "e[0,1]")
    _, oracle, _ = run(capsys, "delta", *args)
    _, printed, _ = run(capsys, "delta", "--closed-form", *args)
    assert printed == oracle


def test_antipode_with_context_string(capsys):
    code, out, _ = run(capsys, "antipode", "--context", "case=g n=1,1 order=2", "d")
    assert code == 0
    assert out.strip() == "-d + O(t^3)"


def test_twist(capsys):
    code, out, _ = run(capsys, "twist", "--case", "g", "--n", "1,1", "--order", "1")
    assert code == 0
    assert out.strip() == "1⊗1 - (d1⊗g[1,1]) t + O(t^2)"


def test_json_output(capsys):
    code, out, _ = run(capsys, "delta", "--format", "json", "--case", "e", "--n", "0,1", "--order", "1", "e[0,1]")
    assert code == 0
    data = json.loads(out)
    assert data["context"]["case"] == "e"
    assert data["input"] == "e[0,1]"
    assert data["value"]["type"] == "series"
    assert data["value"]["order"] == 1


def test_invalid_context_is_a_usage_error(capsys):
    code, out, err = run(capsys, "delta", "--case", "g", "--n", "1,1", "--x", "1,1", "d")
    assert code == 2
    assert out == ""
    assert "x1 n1 + x2 n2" in err


def test_missing_context(capsys):
    code, _, err = run(capsys, "delta", "d")
    assert code == 2
    assert "--case" in err


def test_parse_error(capsys):
    code, _, err = run(capsys, "nf", "e[1,")
    assert code == 2
    assert "offset 4" in err


def test_unknown_suite(capsys):
    code, _, err = run(capsys, "check", "--suite", "nope", "--grid", "quick")
    assert code == 2
    assert "unknown suite" in err


def test_no_command(capsys):
    assert main([]) == 2


def test_check_text(capsys):
    code, out, _ = run(capsys, "check", "--suite", "coefficients", "--grid", "quick", "--order", "1")
    assert code == 0
    assert "coefficients" in out
    assert "checks:" in out


def test_check_json_and_output(capsys, tmp_path):
    code, out, _ = run(capsys, "check", "--suite", "lie-axioms", "--grid", "quick", "--format", "json",
                       "--output", str(tmp_path))
    assert code == 0
    lines = [json.loads(line) for line in out.splitlines()]
    assert lines[-1]["summary"]["counts"]["fail"] == 0
    assert all(line["suite"] == "lie-axioms" for line in lines[:-1])
    assert sorted(p.suffix for p in tmp_path.iterdir()) == [".csv", ".json", ".jsonl"]


def test_check_failure_exit_code(capsys, mutated_exponent):
    code, _, _ = run(capsys, "check", "--suite", "lie-axioms", "--grid", "quick")
    assert code == 1


@pytest.mark.parametrize("argv", [["bracket", "d"], ["check", "--format", "xml"]])
def test_argparse_errors_exit_2(argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2


def test_negative_shift(capsys):
    code, out, err = run(capsys, "twist", "--format", "json", "--which", "inverse",
                         "--case", "g", "--n", "1,1", "--order", "1", "--c", "-1/2")
    assert code == 0, err
    data = json.loads(out)
    assert data["c"] == "-1/2"
    assert data["which"] == "inverse"


def test_negative_degree(capsys):
    code, out, err = run(capsys, "delta", "--case", "e", "--n", "-1,1", "--x", "-1,0", "--order", "1", "d")
    assert code == 0, err
    assert out.strip().startswith("d⊗1 + 1⊗d")
