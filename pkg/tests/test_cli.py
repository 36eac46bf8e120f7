import io
import json
import subprocess
import sys

import pytest
from hypothesis import given, settings

from transcalc import Transseries, ell, errors, exp, inv, lambda_seq, localcontext, parse, x_series
from transcalc.cli import Session, main, repl_eval
from transcalc.fmt import format_json, format_latex, format_text, series_from_obj
from transcalc.parser import BinOp, Call, X as XNode

import randgen as R

X = x_series()


def run(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def evaluate(text, **ctx):
    s = Session()
    if ctx:
        s.ctx = s.ctx.with_(**ctx)
    return s.eval_line(text)


# ---------------------------------------------------------------- parser

def test_parse_examples():
    assert parse("x + log(x)") == BinOp("+", XNode(0), Call("log", (XNode(8),), 4), 2)
    assert evaluate("1/(x - x^2*exp(-x))", term_budget=3) == \
        "x^-1 + exp(-x) + x*exp(-2*x) + O(x^2*exp(-3*x))"


@pytest.mark.parametrize("text,cls,pos", [
    ("x ^ y", errors.SyntaxError, 4),
    ("x +", errors.SyntaxError, 3),
    ("foo(x)", errors.UnknownFunction, 0),
    ("log(x, x)", errors.ArityError, 0),
    ("x $ 2", errors.SyntaxError, 2),
    ("(x", errors.SyntaxError, 2),
    ("1/0", errors.SyntaxError, 2),
])
def test_parse_errors(text, cls, pos):
    with pytest.raises(cls) as info:
        parse(text)
    assert info.value.pos == pos


def test_rational_literals_and_exponents():
    assert evaluate("x^1/2 * x^1/2") == "x"
    assert evaluate("x^(-1)") == "x^-1"
    assert evaluate("1/2*x") == "1/2*x"
    assert evaluate("2^3") == "8"
    assert evaluate("-x^2") == "-x^2"


# ---------------------------------------------------------------- formatting

def test_format_examples():
    assert format_text(1 + inv(X)) == "1 + x^-1"
    assert format_text(lambda_seq(1)) == "x^-1 + x^-1*log(x)^-1"
    assert format_text(Transseries()) == "0"
    assert format_latex(lambda_seq(1)) == r"x^{-1} + x^{-1} (\log x)^{-1}"


def test_json_schema_and_roundtrip():
    f = exp(X) / 2 - ell(2)
    obj = json.loads(format_json(f))
    assert list(obj) == ["terms", "tail"]
    assert obj["terms"][0] == {"monomial": {"logexp": [], "exparg": {
        "terms": [{"monomial": {"logexp": ["1"], "exparg": None}, "coeff": "1"}],
        "tail": None}}, "coeff": "1/2"}
    assert series_from_obj(obj) == f


@settings(max_examples=60, deadline=None)
@given(R.rngs())
def test_parse_format_roundtrip(rng):
    f = R.series(rng)
    s = Session()
    s.ctx = s.ctx.with_(term_budget=100)
    with localcontext(s.ctx):
        assert s.evaluate(parse(format_text(f))) == f


def test_json_output_is_byte_stable():
    cmd = [sys.executable, "-m", "transcalc", "--emit", "json", "-e", "int(exp(x)/x) + log(x+1)"]
    a = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    assert a == b and json.loads(a)["tail"] is not None


# ---------------------------------------------------------------- session

def test_repl_examples():
    s = Session()
    assert repl_eval(":set terms 4", s) == "ok"
    assert repl_eval("d(int(exp(x)/x)) - exp(x)/x", s).startswith("0 + O(")
    assert repl_eval("osc(x^2)", s) == "false"
    assert repl_eval(":mode latex", s) == "ok"
    assert repl_eval("lambda(0)", s) == "x^{-1}"


def test_repl_values():
    s = Session()
    assert repl_eval("let P = Y'' - Y'", s) == "Y'' - Y'"
    assert repl_eval("newton(P)", s) == "Y'"
    assert repl_eval("newton(Y' - Y)", s) == "Y"
    assert repl_eval("vP(Y', x)", s) == "v(x)"
    assert repl_eval("gamma(exp(x))", s) == "v(exp(x))"
    assert repl_eval("cmp(x, log(x))", s) == "1"
    assert repl_eval("in_I(exp(-x))", s) == "true"
    assert repl_eval("eval(2*Y'*Y''' - 3*Y''^2, x^2)", s) == "-12"
    assert repl_eval("equalize(x^2*Y^2, Y)", s) == "x^-2"
    assert repl_eval("compose(x + log(x), x*log(x))", s) == "x*log(x) + log(x) + log(log(x))"
    assert repl_eval("inverse(2*x)", s) == "1/2*x"
    assert repl_eval("solve1(1/x, 1)", s) == "1/2*x"
    assert repl_eval("sign(-x)", s) == "-1"
    assert repl_eval("lt(3*x + 1)", s) == "3*x"


def test_repl_diagnostics():
    s = Session()
    assert repl_eval("log(-x)", s) == "error E_NOT_POSITIVE at 1: log of a non-positive transseries"
    assert repl_eval("x + exp(1)", s).startswith("error E_CONST_NOT_RATIONAL at 5:")
    assert repl_eval("y", s).startswith("error E_UNBOUND at 1:")
    assert repl_eval("log(Y)", s).startswith("error E_TYPE at 1:")
    assert repl_eval(":set terms zero", s).startswith("error E_SYNTAX")
    assert repl_eval("1/(x-x)", s).startswith("error E_DIV_ZERO at 2:")


# ---------------------------------------------------------------- command line

def test_exit_codes():
    assert run(["-e", "x + 1"]) == (0, "x + 1\n", "")
    code, out, err = run(["-e", "log(-x)"])
    assert code == 1 and out == "" and err.startswith("error E_NOT_POSITIVE at 1:1:")
    code, out, err = run(["-e", "x ^ y"])
    assert code == 1 and err.startswith("error E_SYNTAX at 1:5:")
    assert run(["--terms", "0"])[0] == 2
    assert run(["--bogus"])[0] == 2
    assert run(["/nonexistent/script.tc"])[0] == 2


def test_terms_flag_and_env(monkeypatch):
    expr = ["-e", "1/(1 - 1/x)"]
    monkeypatch.setenv("TRANSCALC_TERMS", "2")
    assert run(expr)[1] == "1 + x^-1 + O(x^-2)\n"
    assert run(["--terms", "3"] + expr)[1] == "1 + x^-1 + x^-2 + O(x^-3)\n"
    monkeypatch.setenv("TRANSCALC_TERMS", "lots")
    assert run(expr)[0] == 2


def test_depth_flag():
    assert run(["--max-depth", "2", "-e", "lambda(1)"])[0] == 0
    code, _, err = run(["--max-depth", "2", "-e", "lambda(2)"])
    assert code == 1 and "E_LIMIT" in err


def test_script_and_stdin(tmp_path):
    script = tmp_path / "demo.tc"
    script.write_text("# comment\nlet f = x + log(x)\n:set terms 3\n1/f\n:quit\nlog(-x)\n")
    code, out, err = run([str(script)])
    assert code == 0 and err == ""
    assert out.splitlines() == ["x + log(x)", "ok", "x^-1 - x^-2*log(x) + x^-3*log(x)^2 + O(x^-4*log(x)^3)"]
    code, out, err = run([], stdin="x\nlog(0)\nx\n")
    assert code == 1 and out == "x\n" and err.startswith("error E_NOT_POSITIVE at 2:")


def test_emit_modes():
    assert run(["--emit", "latex", "-e", "1/2*x^-1"])[1] == r"\frac{1}{2} x^{-1}" + "\n"
    out = run(["--emit", "json", "-e", "osc(1/x^2)"])[1]
    assert out == "true\n"
