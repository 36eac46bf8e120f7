"""Grid-based transseries over the rationals.

A :class:`Monomial` is ``l0^r0 * l1^r1 * ... * ld^rd * exp(P)`` with
``l0 = x``, ``l(k+1) = log(lk)`` and ``P`` a purely large exact series.
A :class:`Transseries` is a finite, strictly decreasing list of
``(monomial, coefficient)`` terms, optionally followed by an O-tail
``O(t)``: every unlisted term is below all listed ones and ``<= t``.

Only monomials carry order information; coefficients are
exact rationals (see :mod:`transcalc.rational`).
"""

import numbers
from functools import cmp_to_key, lru_cache
from typing import NamedTuple

from . import errors
from .context import resolve
from .rational import Q

ZERO = Q(0)
ONE = Q(1)


def _strip(exps):
    exps = tuple(exps)
    n = len(exps)
    while n and exps[n - 1] == 0:
        n -= 1
    return exps[:n]


class Monomial:
    """Transmonomial in canonical form; immutable and hashable.

    The constructor trusts its input.  Use :func:`exp_monomial` to build
    ``exp(P)`` from an arbitrary purely large series.
    """

    __slots__ = ("logexp", "exparg", "depth", "height", "_hash")

    def __init__(self, logexp=(), exparg=None):
        logexp = _strip(r if type(r) is Q else Q(r) for r in logexp)
        if exparg is not None and not exparg.terms:
            exparg = None
        self.logexp = logexp
        self.exparg = exparg
        depth = max(len(logexp) - 1, 0)
        height = 0
        if exparg is not None:
            depth = max(depth, exparg.depth())
            height = 1 + exparg.height()
        self.depth = depth
        self.height = height
        self._hash = hash((logexp, exparg))

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Monomial):
            return NotImplemented
        return (self._hash == other._hash and self.logexp == other.logexp
                and self.exparg == other.exparg)

    def __repr__(self):
        from .fmt import format_monomial
        return f"Monomial({format_monomial(self)})"

    def is_one(self):
        return not self.logexp and self.exparg is None

    def is_log_monomial(self):
        return self.exparg is None

    def exponent(self, i):
        return self.logexp[i] if i < len(self.logexp) else ZERO

    def __mul__(self, other):
        if other.is_one():
            return self
        if self.is_one():
            return other
        return _mono_mul(self, other)

    def inverse(self):
        ea = None if self.exparg is None else self.exparg.scaled(-1)
        return Monomial([-r for r in self.logexp], ea)

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, r):
        r = Q(r)
        if r == 0:
            return ONE_MONO
        if r == 1:
            return self
        ea = None if self.exparg is None else self.exparg.scaled(r)
        return Monomial([e * r for e in self.logexp], ea)

    # order, as a convenience; the kernel calls mono_cmp directly
    def __lt__(self, other):
        return mono_cmp(self, other) < 0

    def __gt__(self, other):
        return mono_cmp(self, other) > 0

    def __le__(self, other):
        return mono_cmp(self, other) <= 0

    def __ge__(self, other):
        return mono_cmp(self, other) >= 0

    def is_canonical(self):
        if self.logexp and self.logexp[-1] == 0:
            return False
        P = self.exparg
        if P is None:
            return True
        if P.tail is not None or not P.terms:
            return False
        for m, c in P.terms:
            if c == 0 or mono_cmp(m, ONE_MONO) <= 0 or not m.is_canonical():
                return False
            if _ell_index(m) is not None and _ell_index(m) >= 1:
                return False
        return all(mono_cmp(a[0], b[0]) > 0 for a, b in zip(P.terms, P.terms[1:]))


ONE_MONO = Monomial()


@lru_cache(maxsize=1 << 16)
def _mono_mul(a, b):
    la, lb = a.logexp, b.logexp
    if len(la) < len(lb):
        la, lb = lb, la
    le = [r + lb[i] for i, r in enumerate(la[:len(lb)])] + list(la[len(lb):])
    if a.exparg is None:
        ea = b.exparg
    elif b.exparg is None:
        ea = a.exparg
    else:
        ea = _exact_add(a.exparg, b.exparg)
    return Monomial(le, ea)


def ell_monomial(k):
    """The monomial l_k (l_0 = x)."""
    return Monomial([0] * k + [1])


def _ell_index(m):
    """k if m is exactly l_k, else None."""
    if m.exparg is not None or not m.logexp or m.logexp[-1] != 1:
        return None
    if any(r != 0 for r in m.logexp[:-1]):
        return None
    return len(m.logexp) - 1


def chain_monomial(k, power=1):
    """(l_0 * l_1 * ... * l_k) ** power; k = -1 gives 1."""
    return Monomial([Q(power)] * (k + 1))


def _lex(a, b):
    for i in range(max(len(a), len(b))):
        ai = a[i] if i < len(a) else ZERO
        bi = b[i] if i < len(b) else ZERO
        if ai != bi:
            return 1 if ai > bi else -1
    return 0


@lru_cache(maxsize=1 << 17)
def mono_cmp(a, b):
    """-1, 0, 1 as ``a < b``, ``a == b``, ``a > b`` in the monomial order.

    ``a > b`` iff ``log a - log b`` is positive and purely large, where
    ``log m = sum(r_i * l_(i+1)) + P``.  The exp arguments have smaller
    height, so the recursion terminates.
    """
    if a == b:
        return 0
    if a.exparg is None and b.exparg is None:
        return _lex(a.logexp, b.logexp)
    if a.exparg is None:
        dP = b.exparg.scaled(-1)
    elif b.exparg is None:
        dP = a.exparg
    else:
        dP = _exact_add(a.exparg, b.exparg.scaled(-1))
    lead_l = None
    for i in range(max(len(a.logexp), len(b.logexp))):
        d = a.exponent(i) - b.exponent(i)
        if d:
            lead_l = (ell_monomial(i + 1), d)
            break
    if not dP.terms:
        return 1 if lead_l[1] > 0 else -1
    lead_p = dP.terms[0]
    if lead_l is None:
        return 1 if lead_p[1] > 0 else -1
    # exp arguments never contain a bare l_k, k >= 1, so this is strict
    if mono_cmp(lead_p[0], lead_l[0]) > 0:
        return 1 if lead_p[1] > 0 else -1
    return 1 if lead_l[1] > 0 else -1


_KEY = cmp_to_key(mono_cmp)


def mono_max(a, b):
    """Larger of two optional monomials (None is below everything)."""
    if a is None:
        return b
    if b is None:
        return a
    return a if mono_cmp(a, b) >= 0 else b


def check_limits(m, ctx=None):
    ctx = resolve(ctx)
    if m.depth > ctx.max_depth:
        raise errors.LimitExceeded(
            f"logarithmic depth {m.depth} exceeds max_depth {ctx.max_depth}")
    if m.height > ctx.max_height:
        raise errors.LimitExceeded(
            f"exponential height {m.height} exceeds max_height {ctx.max_height}")
    return m


class Transseries:
    """Immutable transseries value.

    ``terms`` is a tuple of ``(Monomial, Q)`` in strictly
    decreasing monomial order with nonzero coefficients; ``tail`` is an
    optional :class:`Monomial` bound on everything not listed.
    """

    __slots__ = ("terms", "tail", "_hash")

    def __init__(self, terms=(), tail=None):
        self.terms = tuple(terms)
        self.tail = tail
        self._hash = None

    @classmethod
    def from_terms(cls, pairs, tail=None, ctx=None, budget=True):
        """Collect, sort and absorb arbitrary ``(monomial, coeff)`` pairs."""
        return _normalize(pairs, tail, resolve(ctx).term_budget if budget else None)

    @classmethod
    def monomial(cls, m, c=1):
        c = Q(c)
        return cls(((m, c),)) if c else ZERO_SERIES

    @classmethod
    def const(cls, c):
        return cls.monomial(ONE_MONO, c)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.terms, self.tail))
        return self._hash

    def __eq__(self, other):
        if isinstance(other, numbers.Rational):
            other = Transseries.const(other)
        if not isinstance(other, Transseries):
            return NotImplemented
        return self is other or (self.terms == other.terms and self.tail == other.tail)

    def __repr__(self):
        from .fmt import format_text
        return f"Transseries({format_text(self)})"

    def __str__(self):
        from .fmt import format_text
        return format_text(self)

    def __bool__(self):
        return not self.is_zero()

    def is_zero(self):
        return not self.terms and self.tail is None

    def is_exact(self):
        return self.tail is None

    def depth(self):
        d = 0
        for m, _ in self.terms:
            d = max(d, m.depth)
        if self.tail is not None:
            d = max(d, self.tail.depth)
        return d

    def height(self):
        h = 0
        for m, _ in self.terms:
            h = max(h, m.height)
        if self.tail is not None:
            h = max(h, self.tail.height)
        return h

    def bound(self):
        """Dominant monomial, falling back to the tail; None for 0."""
        if self.terms:
            return self.terms[0][0]
        return self.tail

    def scaled(self, c):
        c = Q(c)
        if c == 0:
            return ZERO_SERIES
        if c == 1:
            return self
        return Transseries(((m, a * c) for m, a in self.terms), self.tail)

    def times_monomial(self, m, c=ONE):
        """Exact multiplication by the term ``c*m`` (order preserving)."""
        if c == 0:
            return ZERO_SERIES
        tail = None if self.tail is None else self.tail * m
        return Transseries(((n * m, a * c) for n, a in self.terms), tail)

    def coefficient(self, m):
        for n, c in self.terms:
            if n == m:
                return c
        return ZERO

    def truncated(self, budget):
        return _normalize(self.terms, self.tail, budget)

    # arithmetic sugar; uses the active context.  Unknown operand types
    # return NotImplemented so that, e.g., differential polynomials can
    # take over through their reflected operators.
    def __add__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return neg(self)

    def __sub__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else sub(self, other)

    def __rsub__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else sub(other, self)

    def __mul__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else div(self, other)

    def __rtruediv__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else div(other, self)

    def __pow__(self, r):
        return power(self, r)

    def _order(self, other):
        g = _coerce(other)
        if g is None:
            raise TypeError(f"cannot compare a transseries with {type(other).__name__}")
        return cmp(self, g)

    def __lt__(self, other):
        return self._order(other) < 0

    def __le__(self, other):
        return self._order(other) <= 0

    def __gt__(self, other):
        return self._order(other) > 0

    def __ge__(self, other):
        return self._order(other) >= 0


ZERO_SERIES = Transseries()
ONE_SERIES = Transseries(((ONE_MONO, ONE),))


def _coerce(v):
    if isinstance(v, Transseries):
        return v
    if isinstance(v, numbers.Rational):
        return Transseries.const(v)
    return None


def const(c):
    return Transseries.const(c)


def x_series():
    return Transseries.monomial(ell_monomial(0))


def ell(k):
    """l_k as a transseries."""
    return Transseries.monomial(ell_monomial(k))


def _sort_key(items):
    """Sort key putting larger monomials last (lexicographic for log monomials)."""
    if all(m.exparg is None for m, _ in items):
        n = max(len(m.logexp) for m, _ in items)
        pad = (ZERO,) * n
        return lambda mc: mc[0].logexp + pad[len(mc[0].logexp):]
    return lambda mc: _KEY(mc[0])


def _normalize(pairs, tail, budget):
    acc = {}
    for m, c in pairs:
        if c:
            acc[m] = acc.get(m, ZERO) + c
    items = [(m, c) for m, c in acc.items() if c]
    if tail is not None:
        items = [(m, c) for m, c in items if mono_cmp(m, tail) > 0]
    if len(items) > 1:
        items.sort(key=_sort_key(items), reverse=True)
    if budget is not None and len(items) > budget:
        tail = mono_max(tail, items[budget][0])
        items = items[:budget]
    return Transseries(items, tail)


def _exact_add(f, g):
    """Budget-free sum; used for exp arguments, which must stay exact."""
    if not f.terms and f.tail is None:
        return g
    if not g.terms and g.tail is None:
        return f
    return _normalize(f.terms + g.terms, mono_max(f.tail, g.tail), None)


def _exact_mul(f, g):
    pairs = [(m * n, a * b) for m, a in f.terms for n, b in g.terms]
    return _normalize(pairs, _product_tail(f, g), None)


def _product_tail(f, g):
    tail = None
    if f.tail is not None and g.bound() is not None:
        tail = f.tail * g.bound()
    if g.tail is not None and f.bound() is not None:
        tail = mono_max(tail, g.tail * f.bound())
    return tail


# ---------------------------------------------------------------- ring ops

def add(f, g, ctx=None):
    ctx = resolve(ctx)
    if g.is_zero():
        return f.truncated(ctx.term_budget) if len(f.terms) > ctx.term_budget else f
    if f.is_zero():
        return g.truncated(ctx.term_budget) if len(g.terms) > ctx.term_budget else g
    return _normalize(f.terms + g.terms, mono_max(f.tail, g.tail), ctx.term_budget)


def neg(f):
    return f.scaled(-1)


def sub(f, g, ctx=None):
    return add(f, neg(g), ctx)


def mul(f, g, ctx=None):
    ctx = resolve(ctx)
    if f.is_zero() or g.is_zero():
        return ZERO_SERIES
    if len(g.terms) == 1 and g.tail is None:
        m, c = g.terms[0]
        return _budget(f.times_monomial(m, c), ctx)
    if len(f.terms) == 1 and f.tail is None:
        m, c = f.terms[0]
        return _budget(g.times_monomial(m, c), ctx)
    pairs = [(m * n, a * b) for m, a in f.terms for n, b in g.terms]
    return _normalize(pairs, _product_tail(f, g), ctx.term_budget)


def _budget(f, ctx):
    if len(f.terms) > ctx.term_budget:
        return f.truncated(ctx.term_budget)
    return f


def scale(f, c):
    return f.scaled(c)


def dominant_term(f):
    """``(monomial, coefficient)`` of the leftmost term."""
    if f.terms:
        return f.terms[0]
    if f.tail is not None:
        raise errors.IndeterminateSign("only an O-tail is known; raise the term budget")
    raise errors.ZeroHasNoDominantTerm("0 has no dominant term")


def dominant_monomial(f):
    return dominant_term(f)[0]


def _unit_part(f):
    """Split nonzero f as ``c*m*(1 + eps)``; returns (m, c, eps)."""
    m, c = dominant_term(f)
    scaled = f.times_monomial(m.inverse(), 1 / c)
    eps = Transseries(scaled.terms[1:], scaled.tail)
    return m, c, eps


def power_series(eps, coeff, ctx=None):
    """``sum(coeff(n) * eps**n for n >= 0)`` to the term budget, ``eps < 1``.

    ``coeff`` maps ``n`` to a rational.  The O-tail bounds the omitted
    part by ``bound(eps) ** (n+1)``.
    """
    ctx = resolve(ctx)
    budget = ctx.term_budget
    result = Transseries.const(coeff(0))
    if eps.is_zero():
        return result
    mb = eps.bound()
    if mono_cmp(mb, ONE_MONO) >= 0:
        raise errors.IndeterminateSign("power series argument is not infinitesimal")
    pw = ONE_SERIES
    cap = 4 * budget + 16
    n = 0
    while True:
        n += 1
        pw = mul(pw, eps, ctx)
        a = coeff(n)
        if a:
            result = add(result, pw.scaled(a), ctx)
        nxt = mb ** (n + 1)
        if result.tail is not None and mono_cmp(nxt, result.tail) <= 0:
            break
        if n >= cap:
            break
    return _normalize(result.terms, mono_max(result.tail, nxt), budget)


def inv(f, ctx=None):
    """Multiplicative inverse ``c^-1 m^-1 sum (-eps)^n``."""
    ctx = resolve(ctx)
    if f.is_zero():
        raise errors.DivisionByZero("division by zero")
    m, c, eps = _unit_part(f)
    s = power_series(eps, lambda n: ONE if n % 2 == 0 else -ONE, ctx)
    return s.times_monomial(m.inverse(), 1 / c)


def div(f, g, ctx=None):
    if g.is_zero():
        raise errors.DivisionByZero("division by zero")
    if len(g.terms) == 1 and g.tail is None:
        m, c = g.terms[0]
        return _budget(f.times_monomial(m.inverse(), 1 / c), resolve(ctx))
    return mul(f, inv(g, ctx), ctx)


def _iroot(n, k):
    """Exact integer k-th root of n >= 0, or None."""
    if n < 2:
        return n
    lo, hi = 0, 1 << (n.bit_length() // k + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid ** k <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo if lo ** k == n else None


def rational_power(c, r):
    """``c ** r`` for rational c, r when it is rational; raises otherwise."""
    c, r = Q(c), Q(r)
    if r.denominator == 1:
        return c ** r.numerator
    q = r.denominator
    sgn = 1
    if c < 0:
        if q % 2 == 0:
            raise errors.NegativeLeading(f"even root of negative coefficient {c}")
        sgn, c = -1, -c
    num, den = _iroot(int(c.numerator), q), _iroot(int(c.denominator), q)
    if num is None or den is None:
        raise errors.CoeffNotRepresentable(f"{c}^(1/{q}) is not rational")
    base = Q(sgn * num, den)
    return base ** r.numerator


def power(f, r, ctx=None):
    """``f ** r`` for rational ``r``."""
    ctx = resolve(ctx)
    r = Q(r)
    if r == 0:
        return ONE_SERIES
    if f.is_zero():
        if r < 0:
            raise errors.DivisionByZero("0 to a negative power")
        return ZERO_SERIES
    if r.denominator == 1 and r > 0:
        n = r.numerator
        result, base = ONE_SERIES, f
        while n:
            if n & 1:
                result = mul(result, base, ctx)
            n >>= 1
            if n:
                base = mul(base, base, ctx)
        return result
    m, c, eps = _unit_part(f)
    if r.denominator % 2 == 0 and c < 0:
        raise errors.NegativeLeading("even root of a negative transseries")
    cr = rational_power(c, r)
    s = power_series(eps, lambda n: _binom(r, n), ctx)
    return s.times_monomial(m ** r, cr)


@lru_cache(maxsize=4096)
def _binom(r, n):
    if n == 0:
        return ONE
    return _binom(r, n - 1) * (r - n + 1) / n


def nth_root(f, d, ctx=None):
    if d < 1:
        raise ValueError("root degree must be positive")
    if f.is_zero():
        return ZERO_SERIES
    _, c = dominant_term(f)
    if c < 0:
        raise errors.NegativeLeading("root of a negative transseries")
    return power(f, Q(1, d), ctx)


# ---------------------------------------------------------------- order

def sign(f):
    if f.terms:
        return 1 if f.terms[0][1] > 0 else -1
    if f.tail is not None:
        raise errors.IndeterminateSign("sign of O-tail only; raise the term budget")
    return 0


def cmp(f, g, ctx=None):
    """-1, 0, 1 for ``f < g``, ``f == g``, ``f > g`` in the field order."""
    diff = _normalize(f.terms + tuple((m, -c) for m, c in g.terms),
                      mono_max(f.tail, g.tail), None)
    return sign(diff)


class AsymptoticRelation(NamedTuple):
    """``order`` is -1 for f < g (dominance), 0 for f asymp g, 1 for f > g."""
    order: int
    similar: bool


def asy_compare(f, g):
    if f.is_zero() or g.is_zero():
        raise errors.UndefinedOnZero("asymptotic comparison with 0")
    (mf, cf), (mg, cg) = dominant_term(f), dominant_term(g)
    order = mono_cmp(mf, mg)
    return AsymptoticRelation(order, order == 0 and cf == cg)


def preceq(f, g):
    """f is dominated by g (valuation of f >= valuation of g); zero-safe."""
    if f.is_zero():
        return True
    if g.is_zero():
        return False
    return mono_cmp(dominant_monomial(f), dominant_monomial(g)) <= 0


def prec(f, g):
    if g.is_zero():
        return False
    if f.is_zero():
        return True
    return mono_cmp(dominant_monomial(f), dominant_monomial(g)) < 0


def similar(f, g):
    return asy_compare(f, g).similar


def split(f):
    """``(purely_infinite, constant, infinitesimal)`` parts, summing to f."""
    big, mid, small = [], [], []
    for m, c in f.terms:
        s = mono_cmp(m, ONE_MONO)
        (big if s > 0 else mid if s == 0 else small).append((m, c))
    t = f.tail
    tb = tm = ts = None
    if t is not None:
        s = mono_cmp(t, ONE_MONO)
        if s > 0:
            tb = t
        elif s == 0:
            tm = t
        else:
            ts = t
    return Transseries(big, tb), Transseries(mid, tm), Transseries(small, ts)


def standard_part(f):
    """Strip the infinitesimal part: st(c + eps) = c."""
    big, mid, _ = split(f)
    return _exact_add(big, mid)


def is_purely_large(f):
    return f.tail is None and all(mono_cmp(m, ONE_MONO) > 0 for m, _ in f.terms)


def agrees(f, g):
    """True if f and g list the same terms above the larger of their tails."""
    t = mono_max(f.tail, g.tail)

    def above(s):
        return [(m, c) for m, c in s.terms if t is None or mono_cmp(m, t) > 0]

    return above(f) == above(g)


def is_prefix(small, big):
    """Output at a smaller budget is a prefix of output at a larger one."""
    k = len(small.terms)
    if big.terms[:k] != small.terms:
        return False
    if small.tail is None:
        return big.tail is None and len(big.terms) == k
    return True


def exp_monomial(P, ctx=None):
    """Canonical monomial ``exp(P)`` for an exact purely large P.

    Terms ``c*l_k`` with ``k >= 1`` fold into ``l_(k-1)^c``.
    """
    if P.tail is not None:
        raise errors.IndeterminateSign("exp of a purely large part known only up to O-tail")
    le = []
    rest = []
    for m, c in P.terms:
        if mono_cmp(m, ONE_MONO) <= 0:
            raise ValueError("exp_monomial needs a purely large argument")
        k = _ell_index(m)
        if k is not None and k >= 1:
            while len(le) < k:
                le.append(ZERO)
            le[k - 1] += c
        else:
            rest.append((m, c))
    mono = Monomial(le, Transseries(rest) if rest else None)
    return check_limits(mono, ctx)
