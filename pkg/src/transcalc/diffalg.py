"""Differential polynomials over transseries and the lambda/omega machinery.

A :class:`DiffPoly` maps multi-indices ``(i_0, ..., i_r)`` (the exponents of
``Y, Y', ..., Y^(r)``) to transseries coefficients.
"""

from math import comb

from . import errors
from .asymcouple import GammaElt
from .calculus import derive, logderiv
from .context import resolve
from .rational import Q
from .series import (
    ONE, ONE_SERIES, ZERO_SERIES, Transseries, add, chain_monomial, check_limits,
    cmp, dominant_term, ell, inv, mono_cmp, mul, preceq, sub,
)


def _strip(idx):
    idx = tuple(idx)
    n = len(idx)
    while n and idx[n - 1] == 0:
        n -= 1
    return idx[:n]


def _idx_add(a, b):
    n = max(len(a), len(b))
    return tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))


def _pad(idx, n):
    return tuple(idx) + (0,) * (n - len(idx))


class DiffPoly:
    """Element of ``K{Y}``; immutable."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        for idx, c in (coeffs or {}).items():
            if not isinstance(c, Transseries):
                c = Transseries.const(c)
            if not c.is_zero():
                clean[_strip(idx)] = c
        self.coeffs = clean

    @classmethod
    def var(cls, k=0):
        """``Y^(k)``."""
        return cls({(0,) * k + (1,): ONE_SERIES})

    @classmethod
    def constant(cls, c):
        return cls({(): c})

    def __eq__(self, other):
        return isinstance(other, DiffPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self):
        from .fmt import format_diffpoly
        return f"DiffPoly({format_diffpoly(self)})"

    def is_zero(self):
        return not self.coeffs

    @property
    def order(self):
        return max((len(i) - 1 for i in self.coeffs), default=-1)

    def degrees(self):
        return {sum(i) for i in self.coeffs}

    @property
    def degree(self):
        return max(self.degrees(), default=-1)

    def is_homogeneous(self):
        return len(self.degrees()) == 1

    def homogeneous_part(self, d):
        return DiffPoly({i: c for i, c in self.coeffs.items() if sum(i) == d})

    def depth(self):
        return max((c.depth() for c in self.coeffs.values()), default=0)

    def add(self, other, ctx=None):
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            out[i] = add(out[i], c, ctx) if i in out else c
        return DiffPoly(out)

    def scale(self, a, ctx=None):
        if not isinstance(a, Transseries):
            a = Transseries.const(a)
        return DiffPoly({i: mul(c, a, ctx) for i, c in self.coeffs.items()})

    def mul(self, other, ctx=None):
        out = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                k = _strip(_idx_add(i, j))
                p = mul(a, b, ctx)
                out[k] = add(out[k], p, ctx) if k in out else p
        return DiffPoly(out)

    def pow(self, n, ctx=None):
        out = DiffPoly.constant(1)
        for _ in range(n):
            out = out.mul(self, ctx)
        return out

    def __add__(self, other):
        return self.add(_as_dp(other))

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self.add(_as_dp(other).scale(-1))

    def __rsub__(self, other):
        return _as_dp(other).add(self.scale(-1))

    def __mul__(self, other):
        if isinstance(other, DiffPoly):
            return self.mul(other)
        return self.scale(other)

    __rmul__ = __mul__

    def __pow__(self, n):
        return self.pow(n)

    def derivative(self, ctx=None):
        """The differential polynomial ``P'``."""
        out = DiffPoly()
        for i, a in self.coeffs.items():
            da = derive(a, ctx)
            if not da.is_zero():
                out = out.add(DiffPoly({i: da}), ctx)
            for k, e in enumerate(i):
                if e:
                    j = list(_pad(i, k + 2))
                    j[k] -= 1
                    j[k + 1] += 1
                    out = out.add(DiffPoly({tuple(j): a.scaled(e)}), ctx)
        return out

    def valuation(self):
        """``vP``: the least valuation among the coefficients."""
        if self.is_zero():
            raise errors.ZeroArgument("v(0) is infinite")
        top = None
        for c in self.coeffs.values():
            m = dominant_term(c)[0]
            if top is None or mono_cmp(m, top) > 0:
                top = m
        return GammaElt(top)


def _as_dp(v):
    if isinstance(v, DiffPoly):
        return v
    return DiffPoly.constant(v)


def derivatives(y, r, derivation=None, ctx=None):
    d = derivation or (lambda f: derive(f, ctx))
    out = [y]
    for _ in range(r):
        out.append(d(out[-1]))
    return out


def dp_eval(P, y, derivation=None, ctx=None):
    """``P(y)``; ``derivation`` replaces ``d/dx`` (used for conjugates)."""
    ctx = resolve(ctx)
    if P.is_zero():
        return ZERO_SERIES
    ds = derivatives(y, max(P.order, 0), derivation, ctx)
    cache = {}

    def pw(k, e):
        key = (k, e)
        if key not in cache:
            cache[key] = ONE_SERIES if e == 0 else mul(pw(k, e - 1), ds[k], ctx)
        return cache[key]

    total = ZERO_SERIES
    for i, a in P.coeffs.items():
        term = a
        for k, e in enumerate(i):
            if e:
                term = mul(term, pw(k, e), ctx)
        total = add(total, term, ctx)
    return total


def substitute_linear(P, forms, ctx=None):
    """Replace ``Y^(k)`` by the differential polynomial ``forms[k]``."""
    cache = {}

    def pw(k, e):
        key = (k, e)
        if key not in cache:
            cache[key] = DiffPoly.constant(1) if e == 0 else pw(k, e - 1).mul(forms[k], ctx)
        return cache[key]

    out = DiffPoly()
    for i, a in P.coeffs.items():
        term = DiffPoly.constant(a)
        for k, e in enumerate(i):
            if e:
                term = term.mul(pw(k, e), ctx)
        out = out.add(term, ctx)
    return out


# ---------------------------------------------------------------- conjugation

def conjugation_forms(phi, r, ctx=None):
    """Coefficients ``c[k][j]`` with ``d^k = sum_j c[k][j] delta^j``, ``delta = d/phi``."""
    c = [[ONE_SERIES]]
    for k in range(r):
        prev = c[-1]
        row = [ZERO_SERIES] * (k + 2)
        for j, a in enumerate(prev):
            if a.is_zero():
                continue
            row[j] = add(row[j], derive(a, ctx), ctx)
            row[j + 1] = add(row[j + 1], mul(a, phi, ctx), ctx)
        c.append(row)
    return c


def comp_conjugate(P, phi, ctx=None):
    """``P^phi``: P rewritten for the derivation ``phi^-1 d``."""
    if phi.is_zero():
        raise errors.DivisionByZero("conjugation by 0")
    r = max(P.order, 0)
    rows = conjugation_forms(phi, r, ctx)
    forms = [DiffPoly({(0,) * j + (1,): a for j, a in enumerate(row)}) for row in rows]
    return substitute_linear(P, forms, ctx)


def delta_derivation(phi, ctx=None):
    from .series import div
    return lambda f: div(derive(f, ctx), phi, ctx)


# ---------------------------------------------------------------- newton polynomial

class NewtonPoly:
    """Differential polynomial over the constants, normalized to leading
    coefficient 1.  The leading multi-index is the largest one when compared
    from the highest derivative down (so ``Y'`` leads ``Y^5``)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = {_strip(i): Q(c) for i, c in coeffs.items() if c}
        if not coeffs:
            raise ValueError("Newton polynomial is nonzero")
        n = max(len(i) for i in coeffs)
        lead = max(coeffs, key=lambda i: _pad(i, n)[::-1])
        a = coeffs[lead]
        self.coeffs = {i: c / a for i, c in coeffs.items()}

    def __eq__(self, other):
        return isinstance(other, NewtonPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self):
        from .fmt import format_newton
        return f"NewtonPoly({format_newton(self)})"

    def is_simple_shape(self):
        """``(c_0 + c_1 Y + ... + c_m Y^m) * (Y')^n``."""
        exps_of_dY = set()
        for i in self.coeffs:
            if len(i) > 2:
                return False
            exps_of_dY.add(i[1] if len(i) > 1 else 0)
        return len(exps_of_dY) == 1

    def as_diffpoly(self):
        return DiffPoly({i: c for i, c in self.coeffs.items()})


def residue_poly(Q):
    """Reduce ``Q = a*N + R`` with ``vR > va`` to N."""
    top = Q.valuation().monomial
    out = {}
    for i, c in Q.coeffs.items():
        m, a = dominant_term(c)
        if m == top:
            out[i] = a
    return NewtonPoly(out)


def admissible_phi(n, ctx=None):
    """``phi_n = 1/(l_0 l_1 ... l_n)``."""
    return Transseries.monomial(check_limits(chain_monomial(n, -1), ctx))


def newton_poly(P, ctx=None, trace=None):
    """Newton polynomial via conjugation by ``phi_n`` until two agree."""
    if P.is_zero():
        raise errors.ZeroArgument("Newton polynomial of 0")
    cap = P.depth() + 4
    prev = None
    for n in range(cap + 1):
        N = residue_poly(comp_conjugate(P, admissible_phi(n, ctx), ctx))
        if trace is not None:
            trace.append(N)
        if prev is not None and N == prev:
            return N
        prev = N
    raise errors.NoStabilization(f"no two consecutive agreements up to n = {cap}")


# ---------------------------------------------------------------- v_P and equalizer

def vP_eval(P, g, ctx=None):
    """``v_P(v g) = v(P(gY))`` for a monomial g."""
    if P.is_zero():
        raise errors.ZeroArgument("v_P of P = 0")
    r = max(P.order, 0)
    gs = derivatives(Transseries.monomial(g), r, ctx=ctx)
    forms = []
    for k in range(r + 1):
        forms.append(DiffPoly({(0,) * j + (1,): gs[k - j].scaled(comb(k, j))
                               for j in range(k + 1)}))
    return substitute_linear(P, forms, ctx).valuation()


class Bounds:
    """Search box for :func:`equalize`: monomials ``l_0^k_0 ... l_D^k_D``
    with ``|k_i| <= max_exponent`` and denominators ``<= max_denominator``."""

    def __init__(self, depth=1, max_exponent=3, max_denominator=2):
        self.depth = depth
        self.max_exponent = max_exponent
        self.max_denominator = max_denominator

    def values(self):
        vals = set()
        for q in range(1, self.max_denominator + 1):
            for p in range(-self.max_exponent * q, self.max_exponent * q + 1):
                vals.add(Q(p, q))
        return sorted(vals)

    def lattice(self):
        """Exponent vectors sorted so that the monomials decrease."""
        vals = self.values()
        vecs = [()]
        for _ in range(self.depth + 1):
            vecs = [v + (r,) for v in vecs for r in vals]
        vecs.sort(reverse=True)
        return vecs


def equalize(P, Q, bounds=None, ctx=None):
    """Monomial g with ``v_P(vg) = v_Q(vg)`` for homogeneous P, Q of distinct degrees."""
    from .series import Monomial
    if P.is_zero() or Q.is_zero() or not P.is_homogeneous() or not Q.is_homogeneous():
        raise errors.NotHomogeneous("equalizer needs nonzero homogeneous P and Q")
    if P.degree == Q.degree:
        raise errors.NotHomogeneous("equalizer needs distinct degrees")
    bounds = bounds or Bounds()
    pts = bounds.lattice()

    def s(k):
        g = Monomial(pts[k])
        a, b = vP_eval(P, g, ctx), vP_eval(Q, g, ctx)
        return 0 if a == b else (1 if a > b else -1)

    lo, hi = 0, len(pts) - 1
    slo, shi = s(lo), s(hi)
    if slo == 0:
        return Monomial(pts[lo])
    if shi == 0:
        return Monomial(pts[hi])
    if slo == shi:
        raise errors.NotFoundWithinBounds("no sign change of v_P - v_Q in the search box")
    while hi - lo > 1:
        mid = (lo + hi) // 2
        sm = s(mid)
        if sm == 0:
            return Monomial(pts[mid])
        if sm == slo:
            lo = mid
        else:
            hi = mid
    raise errors.NotFoundWithinBounds("equalizer lies between lattice points")


# ---------------------------------------------------------------- logarithmic decomposition

def _log_expansion(k):
    """``Y^(k)`` as an integer polynomial in ``Y<0>, ..., Y<k>``."""
    poly = {(1,): 1}
    for _ in range(k):
        nxt = {}
        for e, c in poly.items():
            for n, en in enumerate(e):
                if en:
                    f = list(_pad(e, n + 2))
                    f[n + 1] += 1
                    f = _strip(f)
                    nxt[f] = nxt.get(f, 0) + c * en
        poly = nxt
    return poly


def _int_poly_mul(a, b):
    out = {}
    for i, x in a.items():
        for j, y in b.items():
            k = _strip(_idx_add(i, j))
            out[k] = out.get(k, 0) + x * y
    return {k: v for k, v in out.items() if v}


class LogDecomposition:
    """``P = sum P<i> Y<i>`` with ``Y<0> = Y`` and ``Y<n+1> = (Y<n>)†``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = {i: c for i, c in coeffs.items() if not c.is_zero()}

    def __eq__(self, other):
        return isinstance(other, LogDecomposition) and self.coeffs == other.coeffs

    def evaluate(self, y, ctx=None):
        r = max((len(i) - 1 for i in self.coeffs), default=0)
        ys = [eval_logmono(y, 0, ctx)]
        for _ in range(r):
            if ys[-1].is_zero():
                raise errors.UndefinedLogDerivative("iterated log-derivative hits 0")
            ys.append(logderiv(ys[-1], ctx))
        total = ZERO_SERIES
        for i, a in self.coeffs.items():
            term = a
            for k, e in enumerate(i):
                for _ in range(e):
                    term = mul(term, ys[k], ctx)
            total = add(total, term, ctx)
        return total


def log_decompose(P, ctx=None):
    expansions = {}
    out = {}
    for i, a in P.coeffs.items():
        poly = {(): 1}
        for k, e in enumerate(i):
            if e:
                if k not in expansions:
                    expansions[k] = _log_expansion(k)
                for _ in range(e):
                    poly = _int_poly_mul(poly, expansions[k])
        for j, n in poly.items():
            term = a.scaled(n)
            out[j] = add(out[j], term, ctx) if j in out else term
    return LogDecomposition(out)


def eval_logmono(y, n, ctx=None):
    """``y<n>``: the n-fold iterated logarithmic derivative."""
    for _ in range(n):
        if y.is_zero():
            raise errors.UndefinedLogDerivative("logarithmic derivative of 0")
        y = logderiv(y, ctx)
    return y


# ---------------------------------------------------------------- operator ring K[d]

class LinOp:
    """``a_0 + a_1 d + ... + a_n d^n`` with ``d a = a d + a'``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [c if isinstance(c, Transseries) else Transseries.const(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    def __eq__(self, other):
        return isinstance(other, LinOp) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"LinOp({[str(c) for c in self.coeffs]})"

    @property
    def order(self):
        return len(self.coeffs) - 1

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        get = lambda cs, i: cs[i] if i < len(cs) else ZERO_SERIES  # noqa: E731
        return LinOp([add(get(self.coeffs, i), get(other.coeffs, i)) for i in range(n)])

    def __mul__(self, other):
        return linop_mul(self, other)

    def __call__(self, f):
        return linop_apply(self, f)


def linop_mul(A, B, ctx=None):
    """Composition product ``A*B``."""
    out = {}
    for i, a in enumerate(A.coeffs):
        if a.is_zero():
            continue
        for j, b in enumerate(B.coeffs):
            if b.is_zero():
                continue
            # d^i b = sum_k C(i,k) b^(i-k) d^k
            bd = b
            ders = [b]
            for _ in range(i):
                bd = derive(bd, ctx)
                ders.append(bd)
            for k in range(i + 1):
                c = ders[i - k]
                if c.is_zero():
                    continue
                term = mul(a, c, ctx).scaled(comb(i, k))
                out[k + j] = add(out[k + j], term, ctx) if k + j in out else term
    n = max(out, default=-1) + 1
    return LinOp([out.get(k, ZERO_SERIES) for k in range(n)])


def linop_apply(A, f, ctx=None):
    total = ZERO_SERIES
    d = f
    for i, a in enumerate(A.coeffs):
        if i:
            d = derive(d, ctx)
        if not a.is_zero():
            total = add(total, mul(a, d, ctx), ctx)
    return total


def linop_from_dp(P):
    if P.is_zero():
        return LinOp([])
    if P.degrees() != {1}:
        raise errors.NotHomogeneous("only homogeneous linear differential polynomials")
    n = P.order + 1
    return LinOp([P.coeffs.get((0,) * k + (1,), ZERO_SERIES) for k in range(n)])


def linop_to_dp(A):
    return DiffPoly({(0,) * k + (1,): a for k, a in enumerate(A.coeffs)})


# ---------------------------------------------------------------- omega, theta, Schwarzian

def omega_map(z, ctx=None):
    """``omega(z) = -2z' - z^2``."""
    return sub(derive(z, ctx).scaled(-2), mul(z, z, ctx), ctx)


def theta(u, ctx=None):
    """``2(u††)' - (u††)^2 + (u†)^2``."""
    ud = eval_logmono(u, 1, ctx)
    udd = eval_logmono(ud, 1, ctx)
    return add(sub(derive(udd, ctx).scaled(2), mul(udd, udd, ctx), ctx), mul(ud, ud, ctx), ctx)


def schwarzian(u, ctx=None):
    """``S(u) = (u'†)' - (u'†)^2 / 2``."""
    du = derive(u, ctx)
    if du.is_zero():
        raise errors.NonConstantRequired("Schwarzian of a constant")
    w = logderiv(du, ctx)
    return sub(derive(w, ctx), mul(w, w, ctx).scaled(Q(1, 2)), ctx)


def _seq_check(n, ctx):
    ctx = resolve(ctx)
    if n < 0 or n > ctx.max_depth - 1:
        raise errors.LimitExceeded(f"index {n} outside 0..max_depth-1 = {ctx.max_depth - 1}")


def lambda_seq(n, ctx=None):
    """``1/l_0 + 1/(l_0 l_1) + ... + 1/(l_0 ... l_n)``."""
    _seq_check(n, ctx)
    return Transseries([(chain_monomial(k, -1), ONE) for k in range(n + 1)])


def omega_seq(n, ctx=None):
    """``1/l_0^2 + 1/(l_0 l_1)^2 + ... + 1/(l_0 ... l_n)^2``."""
    _seq_check(n, ctx)
    return Transseries([(chain_monomial(k, -2), ONE) for k in range(n + 1)])


def _cofinal_index(f):
    return f.depth() + 2


def in_Lambda(f, ctx=None):
    """f lies below some lambda_n."""
    return cmp(f, lambda_seq(_cofinal_index(f), ctx)) < 0


def in_I(f, ctx=None):
    """``f = 0`` or ``-f† not in Lambda``."""
    if f.is_zero():
        return True
    return not in_Lambda(logderiv(f, ctx).scaled(-1), ctx)


def in_I_direct(f, ctx=None):
    """``f <= (1/l_n)'`` for some n: the definition of I, used as a cross-check."""
    if f.is_zero():
        return True
    n = _cofinal_index(f)
    _seq_check(n, ctx)
    return preceq(f, derive(inv(ell(n), ctx), ctx))


def below_omega_cofinal(f, ctx=None):
    return cmp(f, omega_seq(_cofinal_index(f), ctx)) < 0


def osc_criterion(f, ctx=None):
    """``4y'' + f y = 0`` has a nonzero solution."""
    return below_omega_cofinal(f, ctx)
