import pytest
from hypothesis import given, settings

from transcalc import (
    GammaElt, Transseries, asy_integral_gamma, derive, ell, errors, exp, gamma_data, inv,
    psi, v, x_series,
)

import randgen as R

X = x_series()
L1 = ell(1)
PROPS = settings(max_examples=80, deadline=None)


def test_gamma_data_examples():
    g, gp, gd = gamma_data(X)
    assert (g, gp, gd) == (v(X), GammaElt.zero(), v(inv(X)))
    g, gp, gd = gamma_data(exp(X))
    assert gp == g and gd.is_zero()
    g, gp, gd = gamma_data(L1)
    assert gp == v(inv(X)) and gd == v(inv(X * L1))


def test_gamma_errors():
    with pytest.raises(errors.ZeroArgument):
        v(Transseries())
    with pytest.raises(errors.GammaPrimeUndefinedAtZero):
        gamma_data(Transseries.const(3))


def test_gamma_order_reverses_dominance():
    assert v(X) < v(Transseries.const(1)) < v(inv(X))
    assert v(X) + v(inv(X)) == GammaElt.zero()
    assert v(X).scaled(2) == v(X * X)


def test_asymptotic_integral_gamma():
    assert asy_integral_gamma(v(inv(X))) == v(L1)
    assert asy_integral_gamma(v(exp(X))) == v(exp(X))


def _gamma(rng, positive=None):
    return v(Transseries.monomial(R.gamma_monomial(rng, positive)))


@PROPS
@given(R.rngs())
def test_psi_is_a_valuation(rng):
    a, b = _gamma(rng), _gamma(rng)
    if not (a + b).is_zero():
        assert psi(a + b) >= min(psi(a), psi(b))
    assert psi(-a) == psi(a)


@PROPS
@given(R.rngs())
def test_h_compatibility(rng):
    a, b = _gamma(rng, True), _gamma(rng, True)
    if a > b:
        a, b = b, a
    assert a.dagger() >= b.dagger()


@PROPS
@given(R.rngs())
def test_rosenlicht_axiom(rng):
    a, b = _gamma(rng, True), _gamma(rng, True)
    assert a.dagger() < b + b.dagger()


@PROPS
@given(R.rngs())
def test_psi_decreasing_on_positives(rng):
    a, b = _gamma(rng, True), _gamma(rng, True)
    if a < b:
        assert a.dagger() >= b.dagger()


@PROPS
@given(R.rngs())
def test_prime_is_valuation_of_derivative(rng):
    m = R.gamma_monomial(rng)
    f = Transseries.monomial(m)
    assert v(f).prime() == v(derive(f))
    assert v(f).dagger() == v(f).prime() - v(f)
