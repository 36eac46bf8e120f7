"""Derivation, integration, exp/log and composition of transseries."""

from functools import lru_cache
from math import factorial

from . import errors
from .context import resolve
from .rational import Q
from .series import (
    ONE, ONE_MONO, ONE_SERIES, ZERO, ZERO_SERIES, Transseries, _normalize,
    add, chain_monomial, check_limits, div, dominant_term, ell, ell_monomial,
    exp_monomial, mono_cmp, mono_max, mul, power, power_series, rational_power, sign, split,
    sub, x_series, _unit_part,
)


# ---------------------------------------------------------------- derivation

@lru_cache(maxsize=1 << 15)
def monomial_logderiv(m):
    """Exact ``m'/m = sum r_i / (l_0...l_i) + P'``."""
    pairs = [(chain_monomial(i, -1), r) for i, r in enumerate(m.logexp) if r]
    if m.exparg is not None:
        pairs.extend(derive_exact(m.exparg).terms)
    return _normalize(pairs, None, None)


@lru_cache(maxsize=1 << 15)
def monomial_derivative(m):
    return monomial_logderiv(m).times_monomial(m)


def derive_exact(f):
    """Termwise derivative of a tail-free series, no budget."""
    pairs = [(n, a * c) for m, c in f.terms for n, a in monomial_derivative(m).terms]
    return _normalize(pairs, None, None)


def _tail_derivative(t):
    # f <= t  implies  f' <= t' for t not asymptotic to 1; every
    # infinitesimal has derivative below 1/x
    if mono_cmp(t, ONE_MONO) == 0:
        return ell_monomial(0).inverse()
    return monomial_derivative(t).terms[0][0]


def derive(f, ctx=None):
    ctx = resolve(ctx)
    pairs = [(n, a * c) for m, c in f.terms for n, a in monomial_derivative(m).terms]
    tail = None if f.tail is None else _tail_derivative(f.tail)
    return _normalize(pairs, tail, ctx.term_budget)


def derive_n(f, n, ctx=None):
    for _ in range(n):
        f = derive(f, ctx)
    return f


def logderiv(f, ctx=None):
    """``f'/f``."""
    if f.is_zero():
        raise errors.DivisionByZero("logarithmic derivative of 0")
    if len(f.terms) == 1 and f.tail is None:
        return monomial_logderiv(f.terms[0][0])
    return div(derive(f, ctx), f, ctx)


# ---------------------------------------------------------------- integration

def _first_non_chain(m):
    """Least k with r_k != -1 (exponents beyond the stored ones are 0)."""
    k = 0
    while k < len(m.logexp) and m.logexp[k] == -1:
        k += 1
    return k


def integral_monomial(m, ctx=None):
    """``(n, kappa)`` with ``n' ~ kappa * m``: one asymptotic integration step.

    For ``m = 1/(l_0...l_(k-1))`` this is exact: ``n = l_k``.  Otherwise
    substitute ``u = l_k`` for the first exponent ``r_k != -1`` and take
    either ``u * m * l_0...l_(k-1)`` (logarithmic regime) or ``m / rho``
    (exponential regime), where ``rho`` is the log-derivative in ``u``.
    """
    k = _first_non_chain(m)
    if m.exparg is None and k == len(m.logexp):
        n = check_limits(ell_monomial(k), ctx)
        return n, ONE
    pairs = [(chain_monomial(i, -1), m.logexp[i]) for i in range(k, len(m.logexp))
             if m.logexp[i]]
    if m.exparg is not None:
        pairs.extend(derive_exact(m.exparg).terms)
    rho = _normalize(pairs, None, None)
    tau = chain_monomial(k, -1)
    if rho.terms and mono_cmp(rho.terms[0][0], tau) > 0:
        n = m / rho.terms[0][0]
    else:
        n = m * chain_monomial(k, 1)
    check_limits(n, ctx)
    lead, kappa = monomial_derivative(n).terms[0]
    if lead != m:
        raise errors.TransseriesError(f"integration ansatz failed for {m!r}")
    return n, kappa


def integrate(f, ctx=None):
    """Antiderivative with zero constant term."""
    ctx = resolve(ctx)
    budget = ctx.term_budget
    rem_ctx = ctx.with_(term_budget=2 * budget + 4)
    R = f
    out = []
    tail = None
    while R.terms:
        if len(out) >= budget:
            tail = integral_monomial(R.terms[0][0], ctx)[0]
            break
        m, c = R.terms[0]
        n, kappa = integral_monomial(m, ctx)
        a = c / kappa
        out.append((n, a))
        R = sub(R, monomial_derivative(n).scaled(a), rem_ctx)
    if R.tail is not None:
        tail = mono_max(tail, integral_monomial(R.tail, ctx)[0])
    return _normalize(out, tail, budget)


def asy_int_leading(a, ctx=None):
    """A single term y with ``y' ~ a``."""
    if a.is_zero():
        raise errors.ZeroArgument("asymptotic integral of 0")
    m, c = dominant_term(a)
    n, kappa = integral_monomial(m, ctx)
    return Transseries.monomial(n, c / kappa)


def small_int(y, ctx=None):
    """Small integration: the infinitesimal antiderivative on I, 0 elsewhere."""
    from .diffalg import in_I
    if y.is_zero() or not in_I(y, ctx):
        return ZERO_SERIES
    return integrate(y, ctx)


# ---------------------------------------------------------------- exp / log

def _inv_factorial(n):
    return Q(1, factorial(n))


def exp(f, ctx=None):
    ctx = resolve(ctx)
    big, c0, small = split(f)
    if c0.tail is not None:
        raise errors.IndeterminateSign("constant term of the exponent is unknown")
    if c0.terms:
        raise errors.ConstantTermNotRepresentable(
            f"exp({c0.terms[0][1]}) is not rational")
    m = ONE_MONO if big.is_zero() else exp_monomial(big, ctx)
    return power_series(small, _inv_factorial, ctx).times_monomial(m)


def _log_coeff(n):
    if n == 0:
        return ZERO
    return Q(1 if n % 2 else -1, n)


def monomial_log(m, ctx=None):
    """Exact ``log m = sum r_i l_(i+1) + P``."""
    pairs = []
    for i, r in enumerate(m.logexp):
        if r:
            pairs.append((check_limits(ell_monomial(i + 1), ctx), r))
    if m.exparg is not None:
        pairs.extend(m.exparg.terms)
    return _normalize(pairs, None, None)


def log(f, ctx=None):
    ctx = resolve(ctx)
    if f.is_zero() or sign(f) < 0:
        raise errors.NotPositive("log of a non-positive transseries")
    m, c, eps = _unit_part(f)
    if c != 1:
        raise errors.ConstantTermNotRepresentable(f"log({c}) is not rational")
    return add(monomial_log(m, ctx), power_series(eps, _log_coeff, ctx), ctx)


# ---------------------------------------------------------------- composition

def _require_large_positive(g):
    if g.is_zero():
        raise errors.NotPositivelyInfinite("0 is not positive infinite")
    m, c = dominant_term(g)
    if c < 0 or mono_cmp(m, ONE_MONO) <= 0:
        raise errors.NotPositivelyInfinite("composition needs g > every constant")


class _Composer:
    """Substitution ``x -> g``; caches ``l_k o g`` for one invocation."""

    def __init__(self, g, ctx):
        self.g = g
        self.ctx = ctx
        self.ells = [g]
        self.monos = {}

    def ell(self, k):
        while len(self.ells) <= k:
            self.ells.append(log(self.ells[-1], self.ctx))
        return self.ells[k]

    def monomial(self, m):
        hit = self.monos.get(m)
        if hit is not None:
            return hit
        out = ONE_SERIES
        for i, r in enumerate(m.logexp):
            if r:
                out = mul(out, power(self.ell(i), r, self.ctx), self.ctx)
        if m.exparg is not None:
            out = mul(out, exp(self.series(m.exparg), self.ctx), self.ctx)
        self.monos[m] = out
        return out

    def series(self, f):
        acc = ZERO_SERIES
        for m, c in f.terms:
            acc = add(acc, self.monomial(m).scaled(c), self.ctx)
        if f.tail is not None:
            acc = add(acc, Transseries((), self.monomial(f.tail).bound()), self.ctx)
        return acc


def compose(f, g, ctx=None):
    """``f o g`` for ``g`` positive infinite."""
    ctx = resolve(ctx)
    _require_large_positive(g)
    if g == x_series():
        return f
    return _Composer(g, ctx).series(f)


def _seed_inverse(g, ctx):
    m, c = dominant_term(g)
    if m.exparg is None and m.exponent(0) > 0:
        a = m.exponent(0)
        K = power(Transseries.const(rational_power(a, m.exponent(1)) / c), 1 / a, ctx)
        le = [1 / a] + [-r / a for r in m.logexp[1:]]
        from .series import Monomial
        return K.times_monomial(Monomial(le))
    P = m.exparg
    if (P is not None and len(P.terms) == 1 and P.terms[0][0] == ell_monomial(0)
            and P.terms[0][1] > 0):
        return ell(1).scaled(1 / P.terms[0][1])
    raise errors.UnsupportedInverse("cannot seed compositional inverse for this leading term")


def inverse_comp(g, ctx=None):
    """Compositional inverse by Newton iteration under composition."""
    ctx = resolve(ctx)
    _require_large_positive(g)
    X = x_series()
    if g == X:
        return X
    dg = derive(g, ctx)
    h = _seed_inverse(g, ctx)
    cap = max(8, 2 * ctx.term_budget.bit_length() + 4)
    for _ in range(cap):
        err = sub(X, compose(g, h, ctx), ctx)
        q = compose(dg, h, ctx)
        if not err.terms:
            if err.tail is not None:
                h = add(h, Transseries((), err.tail / dominant_term(q)[0]), ctx)
            break
        h = add(h, div(err, q, ctx), ctx)
    else:
        raise errors.NoConvergenceWithinBudget("Newton iteration did not settle")
    for check in (compose(g, h, ctx), compose(h, g, ctx)):
        if not check.terms or check.terms[0] != (ell_monomial(0), ONE) or len(check.terms) > 1:
            raise errors.NoConvergenceWithinBudget("compose-check failed")
    return h


def iterated_exp(n):
    """e_n as a transseries (e_0 = x)."""
    f = x_series()
    for _ in range(n):
        f = Transseries.monomial(exp_monomial(f))
    return f


# ---------------------------------------------------------------- linear ODE

def solve_linear1(a, b, ctx=None):
    """A solution of ``y' + a*y = b``."""
    ctx = resolve(ctx)
    A = integrate(a, ctx)
    eA = exp(A, ctx)
    return mul(exp(A.scaled(-1), ctx), integrate(mul(eA, b, ctx), ctx), ctx)
