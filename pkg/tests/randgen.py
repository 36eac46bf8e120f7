"""Random generators shared by the property tests and the acceptance suite.

Everything takes a ``random.Random`` so the acceptance suite can run a
fixed, seeded number of cases while hypothesis drives the same generators
through :func:`rngs` (a strategy of seeded ``Random`` instances).

Shapes produced:

* monomials ``x^a log(x)^b log(log(x))^c`` with small rational exponents,
  optionally times ``exp(k*x)`` or ``exp(k*x^2)`` for small integers k;
* exact series of one to three such terms with small nonzero rational
  coefficients;
* positive infinite series (leading monomial > 1, positive coefficient)
  for composition;
* differential polynomials of order at most 2 and degree at most 2 with
  monomial coefficients.
"""

import random
from fractions import Fraction

from hypothesis import strategies as st

from transcalc import DiffPoly, Monomial, Transseries, const, x_series
from transcalc.series import ONE_MONO, mono_cmp

def rngs():
    return st.integers(0, 2 ** 32 - 1).map(random.Random)


EXPS = [Fraction(n, d) for d in (1, 2) for n in range(-2 * d, 2 * d + 1)]


def rational(rng, lo=-3, hi=3, dens=(1, 2, 3)):
    while True:
        c = Fraction(rng.randint(lo, hi), rng.choice(dens))
        if c:
            return c


def log_monomial(rng, depth=2):
    return Monomial([rng.choice(EXPS) for _ in range(depth + 1)])


def monomial(rng, depth=2, exp_prob=0.3):
    m = log_monomial(rng, depth)
    if rng.random() < exp_prob:
        k = rng.choice([-2, -1, 1, 2])
        arg = Transseries.monomial(Monomial([rng.choice([1, 1, 2])]), k)
        m = Monomial(m.logexp, arg)
    return m


def series(rng, nterms=None, depth=2, exp_prob=0.3):
    nterms = nterms or rng.randint(1, 3)
    pairs = [(monomial(rng, depth, exp_prob), rational(rng)) for _ in range(nterms)]
    return Transseries.from_terms(pairs, budget=False)


def nonzero_series(rng, **kw):
    while True:
        f = series(rng, **kw)
        if not f.is_zero():
            return f


def small_series(rng, **kw):
    """Nonzero infinitesimal: every term is below 1."""
    while True:
        f = nonzero_series(rng, **kw)
        kept = [(m, c) for m, c in f.terms if mono_cmp(m, ONE_MONO) < 0]
        if kept:
            return Transseries(kept)


def large_monomial(rng, depth=2, exp_prob=0.3):
    while True:
        m = monomial(rng, depth, exp_prob)
        if mono_cmp(m, ONE_MONO) > 0:
            return m


def positive_infinite(rng, depth=2, exp_prob=0.3):
    """``c*m + lower`` with ``m > 1`` and ``c > 0`` (f > every constant)."""
    m = large_monomial(rng, depth, exp_prob)
    f = Transseries.monomial(m, abs(rational(rng)))
    lower = series(rng, depth=depth, exp_prob=exp_prob)
    lower = Transseries([(n, c) for n, c in lower.terms if mono_cmp(n, m) < 0])
    return f + lower


def composition_argument(rng):
    """Positive infinite series with leading coefficient 1."""
    a = rng.choice([Fraction(1), Fraction(2), Fraction(1, 2)])
    b = rng.choice([Fraction(0), Fraction(0), Fraction(1), Fraction(-1)])
    # leading coefficient 1 keeps log(g) free of log(c)
    g = Transseries.monomial(Monomial([a, b]))
    if rng.random() < 0.5:
        g = g + Transseries.monomial(Monomial([0, 1]), rational(rng))
    if rng.random() < 0.2:
        g = Transseries.monomial(Monomial([], x_series()))
    return g


def diff_poly(rng, order=2, degree=2, nterms=None, homogeneous=None, depth=1):
    """Random nonzero P; ``homogeneous=d`` forces every term to degree d."""
    nterms = nterms or rng.randint(1, 3)
    coeffs = {}
    while not coeffs:
        for _ in range(nterms):
            d = homogeneous if homogeneous is not None else rng.randint(0, degree)
            idx = [0] * (order + 1)
            for _ in range(d):
                idx[rng.randint(0, order)] += 1
            c = Transseries.monomial(log_monomial(rng, depth), rational(rng))
            coeffs[tuple(idx)] = c
        P = DiffPoly(coeffs)
        if P.is_zero():
            coeffs = {}
    return P


def gamma_monomial(rng, positive=None):
    """Monomial m != 1; ``positive=True`` gives v(m) > 0, that is m < 1."""
    while True:
        m = monomial(rng)
        s = mono_cmp(m, ONE_MONO)
        if s == 0:
            continue
        if positive is None or (s < 0) == positive:
            return m


def constant(c):
    return const(c)
