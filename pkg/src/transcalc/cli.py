"""Evaluator, REPL session and command line entry point."""

import argparse
import json
import os
import sys

from . import calculus, diffalg, errors, fmt, parser
from .asymcouple import GammaElt, v
from .context import Context, localcontext
from .diffalg import DiffPoly, NewtonPoly
from .rational import Q
from .series import ONE_MONO, Transseries, cmp, dominant_term, sign, x_series

MODES = ("text", "latex", "json")


class Quit(Exception):
    pass


def _series(val, what="argument"):
    if isinstance(val, Transseries):
        return val
    raise errors.EvalTypeError(f"{what} must be a transseries, got {_kind(val)}")


def _diffpoly(val):
    if isinstance(val, DiffPoly):
        return val
    if isinstance(val, Transseries):
        return DiffPoly.constant(val)
    raise errors.EvalTypeError(f"expected a differential polynomial, got {_kind(val)}")


def _index(val):
    f = _series(val)
    if f.tail is None and (f.is_zero() or (len(f.terms) == 1 and f.terms[0][0] == ONE_MONO)):
        c = f.terms[0][1] if f.terms else Q(0)
        if c.denominator == 1:
            return int(c)
    raise errors.EvalTypeError("index must be an integer literal")


def _kind(val):
    return {Transseries: "transseries", DiffPoly: "differential polynomial",
            NewtonPoly: "Newton polynomial", GammaElt: "value-group element",
            bool: "boolean", int: "integer"}.get(type(val), type(val).__name__)


def _monomial_of(val):
    f = _series(val)
    if f.is_zero():
        raise errors.ZeroArgument("v(0) is infinite")
    return dominant_term(f)[0]


def _lt(f):
    m, c = dominant_term(_series(f))
    return Transseries.monomial(m, c)


def _d(val):
    if isinstance(val, DiffPoly):
        return val.derivative()
    return calculus.derive(_series(val))


def _mono_series(m):
    return Transseries.monomial(m)


_CALLS = {
    "log": lambda f: calculus.log(_series(f)),
    "exp": lambda f: calculus.exp(_series(f)),
    "d": _d,
    "int": lambda f: calculus.integrate(_series(f)),
    "compose": lambda f, g: calculus.compose(_series(f), _series(g)),
    "inverse": lambda g: calculus.inverse_comp(_series(g)),
    "lt": _lt,
    "sign": lambda f: sign(_series(f)),
    "cmp": lambda f, g: cmp(_series(f), _series(g)),
    "lambda": lambda n: diffalg.lambda_seq(_index(n)),
    "omega": lambda n: diffalg.omega_seq(_index(n)),
    "omega_map": lambda z: diffalg.omega_map(_series(z)),
    "theta": lambda u: diffalg.theta(_series(u)),
    "schwarzian": lambda u: diffalg.schwarzian(_series(u)),
    "newton": lambda P: diffalg.newton_poly(_diffpoly(P)),
    "vP": lambda P, g: diffalg.vP_eval(_diffpoly(P), _monomial_of(g)),
    "solve1": lambda a, b: calculus.solve_linear1(_series(a), _series(b)),
    "in_I": lambda f: diffalg.in_I(_series(f)),
    "in_Lambda": lambda f: diffalg.in_Lambda(_series(f)),
    "osc": lambda f: diffalg.osc_criterion(_series(f)),
    "gamma": lambda f: v(_series(f)),
    "sint": lambda f: calculus.small_int(_series(f)),
    "eval": lambda P, y: diffalg.dp_eval(_diffpoly(P), _series(y)),
    "conj": lambda P, phi: diffalg.comp_conjugate(_diffpoly(P), _series(phi)),
    "equalize": lambda P1, P2: _mono_series(diffalg.equalize(_diffpoly(P1), _diffpoly(P2))),
}


def _binop(op, a, b):
    if isinstance(a, DiffPoly) or isinstance(b, DiffPoly):
        a, b = _diffpoly(a), _diffpoly(b)
        if op == "+":
            return a + b
        if op == "-":
            return a - b
        if op == "*":
            return a.mul(b)
        if op == "/":
            if b.order > 0 or () not in b.coeffs or len(b.coeffs) != 1:
                raise errors.EvalTypeError("can only divide a differential polynomial by a transseries")
            return a.scale(1 / b.coeffs[()])
    a, b = _series(a, "operand"), _series(b, "operand")
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    return a / b


def _pow(base, r):
    if isinstance(base, DiffPoly):
        if r.denominator != 1 or r < 0:
            raise errors.EvalTypeError("differential polynomials take non-negative integer powers")
        return base.pow(int(r))
    return _series(base, "operand") ** r


class Session:
    """Context, output mode and let-bindings of one REPL or script run."""

    def __init__(self, ctx=None, mode="text"):
        self.ctx = ctx or Context()
        self.mode = mode
        self.bindings = {}

    # -- evaluation

    def evaluate(self, node):
        try:
            return self._eval(node)
        except errors.TransseriesError as e:
            if getattr(e, "pos", None) is None:
                e.pos = getattr(node, "pos", 0)
            raise

    def _eval(self, node):
        if isinstance(node, parser.Num):
            return Transseries.const(node.value)
        if isinstance(node, parser.X):
            return x_series()
        if isinstance(node, parser.DVar):
            return DiffPoly.var(node.order)
        if isinstance(node, parser.Name):
            if node.name not in self.bindings:
                raise errors.UnboundName(f"unbound name {node.name!r}")
            return self.bindings[node.name]
        if isinstance(node, parser.Neg):
            val = self.evaluate(node.arg)
            if isinstance(val, DiffPoly):
                return -val
            return -_series(val, "operand")
        if isinstance(node, (parser.BinOp, parser.Pow, parser.Call)):
            try:
                if isinstance(node, parser.BinOp):
                    return _binop(node.op, self.evaluate(node.left), self.evaluate(node.right))
                if isinstance(node, parser.Pow):
                    return _pow(self.evaluate(node.base), node.exponent)
                args = [self.evaluate(a) for a in node.args]
                return _CALLS[node.name](*args)
            except errors.TransseriesError as e:
                if getattr(e, "pos", None) is None:
                    e.pos = node.pos
                raise
        if isinstance(node, parser.Let):
            val = self.evaluate(node.expr)
            self.bindings[node.name] = val
            return val
        raise TypeError(f"unknown node {node!r}")

    # -- formatting

    def render(self, val):
        mode = self.mode
        if isinstance(val, bool):
            return "true" if val else "false"
        if isinstance(val, int):
            return str(val)
        if isinstance(val, Transseries):
            return fmt.format_series(val, mode)
        if isinstance(val, GammaElt):
            if mode == "json":
                return json.dumps({"gamma": fmt.monomial_to_obj(val.monomial)}, separators=(",", ":"))
            if mode == "latex":
                return f"v({fmt.latex_monomial(val.monomial)})"
            return f"v({fmt.format_monomial(val.monomial)})"
        if isinstance(val, DiffPoly):
            if mode == "json":
                return json.dumps(fmt.diffpoly_to_obj(val), separators=(",", ":"))
            return fmt.format_diffpoly(val)
        if isinstance(val, NewtonPoly):
            if mode == "json":
                obj = {"newton": [{"index": list(i), "coeff": str(c)}
                                  for i, c in sorted(val.coeffs.items())]}
                return json.dumps(obj, separators=(",", ":"))
            return fmt.format_newton(val)
        return str(val)

    # -- commands

    def command(self, line):
        words = line[1:].split()
        if not words:
            raise errors.SyntaxError("empty command", 0)
        cmd = words[0]
        if cmd == "quit" and len(words) == 1:
            raise Quit
        if cmd == "mode" and len(words) == 2 and words[1] in MODES:
            self.mode = words[1]
            return "ok"
        if cmd == "set" and len(words) == 3:
            field = {"terms": "term_budget", "depth": "max_depth", "height": "max_height"}.get(words[1])
            try:
                n = int(words[2])
            except ValueError:
                n = None
            if field and n is not None and n >= 1:
                self.ctx = self.ctx.with_(**{field: n})
                return "ok"
        raise errors.SyntaxError(f"unknown or malformed command {line.strip()!r}", 0)

    def eval_line(self, line):
        """Evaluate one line and return its rendering (empty for blank lines)."""
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            return ""
        if stripped.startswith(":"):
            return self.command(stripped)
        node = parser.parse(line)
        with localcontext(self.ctx):
            val = self.evaluate(node)
            return self.render(val)


def diagnostic(exc, line_no=None):
    code = getattr(exc, "code", "E_INTERNAL")
    pos = getattr(exc, "pos", None)
    col = 1 if pos is None else pos + 1
    where = f"{line_no}:{col}" if line_no is not None else f"{col}"
    return f"error {code} at {where}: {exc}"


def repl_eval(line, session):
    """Evaluate one line; errors come back as a diagnostic string."""
    try:
        return session.eval_line(line)
    except (errors.TransseriesError, errors.ParseError) as e:
        return diagnostic(e)


def run_lines(lines, session, out, err, stop_on_error=True):
    """Returns the exit status: 0 if every line succeeded, else 1."""
    status = 0
    for no, line in enumerate(lines, 1):
        try:
            text = session.eval_line(line)
        except Quit:
            break
        except (errors.TransseriesError, errors.ParseError) as e:
            print(diagnostic(e, no), file=err)
            status = 1
            if stop_on_error:
                break
            continue
        if text:
            print(text, file=out)
    return status


def _positive_int(s):
    try:
        n = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {s!r}")
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def build_arg_parser():
    defaults = Context()
    p = argparse.ArgumentParser(prog="transcalc",
                                description="Exact calculator for transseries.")
    p.add_argument("--terms", type=_positive_int, default=None,
                   help=f"term budget (default {defaults.term_budget}, or $TRANSCALC_TERMS)")
    p.add_argument("--max-depth", type=_positive_int, default=defaults.max_depth)
    p.add_argument("--max-height", type=_positive_int, default=defaults.max_height)
    p.add_argument("--emit", choices=MODES, default="text")
    p.add_argument("-e", dest="expr", action="append",
                   help="evaluate an expression and exit (repeatable)")
    p.add_argument("script", nargs="?", help="script file, one statement per line")
    return p


def main(argv=None, stdin=None, stdout=None, stderr=None):
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    ap = build_arg_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return e.code
    terms = args.terms
    if terms is None:
        env = os.environ.get("TRANSCALC_TERMS")
        if env is not None:
            try:
                terms = _positive_int(env)
            except argparse.ArgumentTypeError as e:
                print(f"transcalc: TRANSCALC_TERMS: {e}", file=stderr)
                return 2
        else:
            terms = Context().term_budget
    if args.expr and args.script:
        print("transcalc: give either -e or a script, not both", file=stderr)
        return 2
    session = Session(Context(terms, args.max_depth, args.max_height), args.emit)
    if args.expr:
        return run_lines(args.expr, session, stdout, stderr)
    if args.script:
        try:
            with open(args.script, encoding="utf-8") as fh:
                lines = fh.read().splitlines()
        except OSError as e:
            print(f"transcalc: cannot read {args.script}: {e.strerror}", file=stderr)
            return 2
        return run_lines(lines, session, stdout, stderr)
    if stdin.isatty():
        return _interactive(session, stdout, stderr)
    return run_lines(stdin.read().splitlines(), session, stdout, stderr)


def _interactive(session, out, err):
    while True:
        try:
            line = input("> ")
        except EOFError:
            return 0
        try:
            text = session.eval_line(line)
        except Quit:
            return 0
        except (errors.TransseriesError, errors.ParseError) as e:
            print(diagnostic(e), file=err)
            continue
        if text:
            print(text, file=out)


if __name__ == "__main__":
    sys.exit(main())
