from fractions import Fraction

import pytest
from hypothesis import given, settings

from transcalc import (
    Bounds, DiffPoly, LinOp, Monomial, NewtonPoly, Transseries, below_omega_cofinal,
    chain_monomial, comp_conjugate, derive, dp_eval, ell, equalize, errors, eval_logmono,
    exp, in_I, in_I_direct, in_Lambda, inv, lambda_seq, linop_apply, linop_from_dp,
    linop_mul, linop_to_dp, localcontext, log_decompose, newton_poly, omega_map, omega_seq,
    osc_criterion, power, schwarzian, theta, v, vP_eval, x_series,
)
from transcalc.diffalg import delta_derivation

import randgen as R

X = x_series()
L1 = ell(1)
Y, Y1, Y2, Y3 = (DiffPoly.var(k) for k in range(4))
ONE = Transseries.const(1)
PROPS = settings(max_examples=40, deadline=None)


def mono(*logexp, exparg=None):
    return Monomial([Fraction(r) for r in logexp], exparg)


# ---------------------------------------------------------------- differential polynomials

def test_dp_eval_examples():
    P = 2 * Y1 * Y3 - 3 * Y2 * Y2
    assert dp_eval(P, X * X) == Transseries.const(-12)
    assert dp_eval(P, X).is_zero()
    f = exp(X) + L1
    assert dp_eval(Y, f) == f


def test_derivative_of_diffpoly():
    assert (Y * Y).derivative() == 2 * Y * Y1
    assert (X * Y1).derivative() == Y1 + X * Y2


def test_log_decompose_examples():
    d = log_decompose(Y2)
    assert d.coeffs == {(1, 2): ONE, (1, 1, 1): ONE}
    assert log_decompose(Y1).coeffs == {(1, 1): ONE}
    assert log_decompose(Y).coeffs == {(1,): ONE}
    for y in (X * X, X ** 3):
        assert d.evaluate(y) == dp_eval(Y2, y)


def test_eval_logmono_examples():
    assert eval_logmono(X, 1) == inv(X)
    assert eval_logmono(X, 0) == X
    ex = exp(X)
    assert eval_logmono(ex, 1) == ONE
    assert eval_logmono(ex, 2).is_zero()
    with pytest.raises(errors.UndefinedLogDerivative):
        eval_logmono(ex, 3)


def test_conjugate_examples():
    phi = X
    assert comp_conjugate(Y1, phi) == phi * Y1
    assert comp_conjugate(Y2, phi) == phi * phi * Y2 + derive(phi) * Y1
    P = Y2 + 3 * Y * Y1
    assert comp_conjugate(P, ONE) == P
    y = X ** 3
    assert dp_eval(comp_conjugate(Y2, phi), y, delta_derivation(phi)) == dp_eval(Y2, y)
    with pytest.raises(errors.DivisionByZero):
        comp_conjugate(Y1, Transseries())


def test_newton_examples():
    assert newton_poly(Y1 - Y) == NewtonPoly({(1,): 1})
    assert newton_poly(Y) == NewtonPoly({(1,): 1})
    trace = []
    assert newton_poly(Y2, trace=trace) == NewtonPoly({(0, 1): 1})
    # n = 0 keeps both terms, the Y' term wins from n = 1 on
    assert trace[0] == NewtonPoly({(0, 0, 1): 1, (0, 1): -1})
    assert trace[1:] == [NewtonPoly({(0, 1): 1})] * 2


def test_newton_normalization():
    N = NewtonPoly({(0, 1): 3, (1,): 6})
    assert N.coeffs == {(0, 1): 1, (1,): 2}
    assert N.is_simple_shape() is False
    assert NewtonPoly({(2, 1): 1, (0, 1): 5}).is_simple_shape()


def test_vp_eval_examples():
    g = mono(2, -1)
    assert vP_eval(Y, g) == v(Transseries.monomial(g))
    assert vP_eval(Y * Y, g) == v(Transseries.monomial(g)).scaled(2)
    # (xY)' = Y + xY': min(v(1), v(x)) = v(x)
    assert vP_eval(Y1, mono(1)) == v(X)


def test_equalize_examples():
    assert equalize(Y * Y, Y) == Monomial()
    assert equalize(Y ** 3, Y) == Monomial()
    g = equalize(Y * Y, Y1)
    assert vP_eval(Y * Y, g) == vP_eval(Y1, g)
    assert g == Monomial()


def test_equalize_errors():
    with pytest.raises(errors.NotHomogeneous):
        equalize(Y * Y + Y, Y)
    with pytest.raises(errors.NotHomogeneous):
        equalize(Y1, Y)
    # v(P) - v(Q) = v(x^-6) never vanishes
    with pytest.raises(errors.NotFoundWithinBounds):
        equalize(Transseries.monomial(mono(-6)) * Y * Y, Y, Bounds(depth=0, max_exponent=2))


def test_equalize_nontrivial():
    # v_{x^2 Y^2}(g) = v_Y(g) at g = x^-2
    g = equalize(X * X * Y * Y, Y)
    assert g == mono(-2)


# ---------------------------------------------------------------- operators

def test_linop_examples():
    d = LinOp([0, 1])
    xop = LinOp([X])
    assert linop_mul(d, xop) == LinOp([1, X])
    assert linop_mul(LinOp([-1, 1]), LinOp([1, 1])) == LinOp([-1, 0, 1])
    assert linop_apply(LinOp([1, X]), X) == 2 * X
    for y in (X * X, X ** 3):
        assert linop_apply(linop_mul(d, xop), y) == derive(X * y)


def test_linop_roundtrip():
    P = X * Y2 + 3 * Y
    assert linop_to_dp(linop_from_dp(P)) == P
    with pytest.raises(errors.NotHomogeneous):
        linop_from_dp(Y * Y)


# ---------------------------------------------------------------- explicit formulas

def test_omega_theta_schwarzian():
    assert omega_map(Transseries()).is_zero()
    assert omega_map(inv(X)) == omega_seq(0)
    assert theta(X) == 2 * inv(X * X)
    assert schwarzian(X).is_zero()
    assert schwarzian(X * X) == Transseries.const(Fraction(-3, 2)) * inv(X * X)
    with pytest.raises(errors.NonConstantRequired):
        schwarzian(Transseries.const(3))


def test_schwarzian_matches_classical_form():
    for u in (X ** 3, X * L1, exp(X), X + inv(X)):
        d1 = derive(u)
        d2, d3 = derive(d1), derive(derive(d1))
        classical = d3 / d1 - Fraction(3, 2) * (d2 / d1) ** 2
        with localcontext(term_budget=10):
            s = schwarzian(u)
        assert s.terms[:3] == classical.terms[:3]


def test_lambda_omega_examples():
    assert lambda_seq(0) == inv(X)
    assert lambda_seq(1) == inv(X) + inv(X * L1)
    assert omega_seq(0) == inv(X * X)
    assert str(lambda_seq(1)) == "x^-1 + x^-1*log(x)^-1"
    with localcontext(max_depth=3):
        with pytest.raises(errors.LimitExceeded):
            omega_seq(3)


def test_membership_examples():
    assert osc_criterion(inv(X * X))
    assert not osc_criterion(X * X)
    assert in_I(exp(-X)) and in_I_direct(exp(-X))
    assert not in_I(inv(X)) and not in_I_direct(inv(X))
    assert in_Lambda(inv(X)) and not in_Lambda(Transseries.const(1))
    assert below_omega_cofinal(omega_seq(3))
    assert not below_omega_cofinal(omega_seq(3) + Transseries.monomial(chain_monomial(3, -1) ** 2))


def test_osc_oracle():
    y = power(X, Fraction(1, 2))
    assert (4 * derive(derive(y)) + inv(X * X) * y).is_zero()


def test_theta_pool_not_oscillating():
    for u in (X, X * X, exp(X), X * L1, exp(exp(X))):
        assert not osc_criterion(theta(u))


# ---------------------------------------------------------------- properties

@PROPS
@given(R.rngs())
def test_conjugation_identity(rng):
    P = R.diff_poly(rng)
    y = R.series(rng, nterms=2)
    phi = Transseries.monomial(R.monomial(rng), R.rational(rng))
    with localcontext(term_budget=400):
        assert dp_eval(P, y) == dp_eval(comp_conjugate(P, phi), y, delta_derivation(phi))


@PROPS
@given(R.rngs())
def test_log_decomposition_property(rng):
    P = R.diff_poly(rng, order=rng.randint(0, 3))
    y = Transseries.monomial(R.large_monomial(rng), R.rational(rng))
    with localcontext(term_budget=6):
        a, b = dp_eval(P, y), log_decompose(P).evaluate(y)
    assert a.terms[:1] == b.terms[:1]


@PROPS
@given(R.rngs())
def test_newton_shape(rng):
    assert newton_poly(R.diff_poly(rng)).is_simple_shape()


@PROPS
@given(R.rngs())
def test_vp_strictly_increasing(rng):
    P = R.diff_poly(rng, homogeneous=rng.randint(1, 3))
    g1, g2 = R.monomial(rng), R.monomial(rng)
    if g1 == g2:
        return
    if g1 < g2:
        g1, g2 = g2, g1
    assert vP_eval(P, g1) < vP_eval(P, g2)


@PROPS
@given(R.rngs())
def test_linop_laws(rng):
    def op():
        return LinOp([Transseries.monomial(R.log_monomial(rng, 1), R.rational(rng))
                      for _ in range(rng.randint(1, 3))])
    A, B, C = op(), op(), op()
    with localcontext(term_budget=200):
        assert linop_mul(linop_mul(A, B), C) == linop_mul(A, linop_mul(B, C))
        f = R.series(rng, exp_prob=0)
        assert linop_apply(linop_mul(A, B), f) == linop_apply(A, linop_apply(B, f))
        assert linop_apply(A + B, f) == linop_apply(A, f) + linop_apply(B, f)


@PROPS
@given(R.rngs())
def test_duality(rng):
    f = Transseries.monomial(R.monomial(rng), R.rational(rng))
    formula = not in_Lambda(-derive(f) / f)
    assert in_I(f) == formula == in_I_direct(f)
