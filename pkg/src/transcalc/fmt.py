"""Text, LaTeX and JSON renderings of transseries.

Text output uses the expression grammar of :mod:`transcalc.parser`, so
tail-free values parse back to themselves.
"""

import json

from .rational import Q


def _ell_text(i):
    return "log(" * i + "x" + ")" * i


def _exp_text(r):
    return str(Q(r))


def format_monomial(m):
    parts = []
    for i, r in enumerate(m.logexp):
        if r == 0:
            continue
        base = _ell_text(i)
        parts.append(base if r == 1 else f"{base}^{_exp_text(r)}")
    if m.exparg is not None:
        parts.append(f"exp({format_text(m.exparg)})")
    return "*".join(parts) if parts else "1"


def _term_text(m, c):
    if m.is_one():
        return str(c)
    mono = format_monomial(m)
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return f"{c}*{mono}"


def _join(pieces):
    out = ""
    for i, p in enumerate(pieces):
        if i == 0:
            out = p
        elif p.startswith("-"):
            out += " - " + p[1:]
        else:
            out += " + " + p
    return out


def format_text(f):
    pieces = [_term_text(m, c) for m, c in f.terms]
    if f.tail is not None:
        if not pieces:
            pieces.append("0")
        pieces.append(f"O({format_monomial(f.tail)})")
    return _join(pieces) if pieces else "0"


# ---------------------------------------------------------------- latex

def _latex_frac(c):
    c = Q(c)
    if c.denominator == 1:
        return str(c.numerator)
    s = "-" if c < 0 else ""
    return f"{s}\\frac{{{abs(c.numerator)}}}{{{c.denominator}}}"


def _ell_latex(i):
    if i == 0:
        return "x"
    return "\\log " * i + "x"


def latex_monomial(m):
    parts = []
    for i, r in enumerate(m.logexp):
        if r == 0:
            continue
        base = _ell_latex(i)
        if r == 1:
            parts.append(base)
        else:
            if i > 0:
                base = f"({base})"
            parts.append(f"{base}^{{{_latex_frac(r)}}}")
    if m.exparg is not None:
        parts.append(f"e^{{{format_latex(m.exparg)}}}")
    return " ".join(parts) if parts else "1"


def format_latex(f):
    pieces = []
    for m, c in f.terms:
        if m.is_one():
            pieces.append(_latex_frac(c))
        elif c == 1:
            pieces.append(latex_monomial(m))
        elif c == -1:
            pieces.append("-" + latex_monomial(m))
        else:
            pieces.append(f"{_latex_frac(c)} {latex_monomial(m)}")
    if f.tail is not None:
        if not pieces:
            pieces.append("0")
        pieces.append(f"O({latex_monomial(f.tail)})")
    return _join(pieces) if pieces else "0"


# ---------------------------------------------------------------- json

def monomial_to_obj(m):
    return {
        "logexp": [str(r) for r in m.logexp],
        "exparg": None if m.exparg is None else series_to_obj(m.exparg),
    }


def series_to_obj(f):
    return {
        "terms": [{"monomial": monomial_to_obj(m), "coeff": str(c)} for m, c in f.terms],
        "tail": None if f.tail is None else monomial_to_obj(f.tail),
    }


def format_json(f):
    return json.dumps(series_to_obj(f), separators=(",", ":"))


def monomial_from_obj(obj):
    from .series import Monomial
    exparg = None if obj["exparg"] is None else series_from_obj(obj["exparg"])
    return Monomial([Q(r) for r in obj["logexp"]], exparg)


def series_from_obj(obj):
    from .series import Transseries
    terms = [(monomial_from_obj(t["monomial"]), Q(t["coeff"])) for t in obj["terms"]]
    tail = None if obj["tail"] is None else monomial_from_obj(obj["tail"])
    return Transseries(terms, tail)


def format_series(f, mode="text"):
    if mode == "text":
        return format_text(f)
    if mode == "latex":
        return format_latex(f)
    if mode == "json":
        return format_json(f)
    raise ValueError(f"unknown mode {mode!r}")


# ---------------------------------------------------------------- differential polynomials

def _dvar(k):
    return "Y" + "'" * k


def _dmono_text(idx):
    parts = []
    for k, e in enumerate(idx):
        if e:
            v = _dvar(k)
            parts.append(v if e == 1 else f"{v}^{e}")
    return "*".join(parts)


def _dp_pieces(items):
    pieces = []
    for idx, c in items:
        mono = _dmono_text(idx)
        if not mono:
            pieces.append(c)
        elif c == "1":
            pieces.append(mono)
        elif c == "-1":
            pieces.append("-" + mono)
        elif " " in c:
            pieces.append(f"({c})*{mono}")
        else:
            pieces.append(f"{c}*{mono}")
    return _join(pieces) if pieces else "0"


def format_diffpoly(P):
    items = sorted(P.coeffs.items(), key=lambda kv: (len(kv[0]), tuple(reversed(kv[0]))),
                   reverse=True)
    return _dp_pieces([(i, format_text(c)) for i, c in items])


def format_newton(N):
    items = sorted(N.coeffs.items(), key=lambda kv: (len(kv[0]), tuple(reversed(kv[0]))),
                   reverse=True)
    return _dp_pieces([(i, str(c)) for i, c in items])


def diffpoly_to_obj(P):
    return {"diffpoly": [{"index": list(i), "coeff": series_to_obj(c)}
                         for i, c in sorted(P.coeffs.items())]}
