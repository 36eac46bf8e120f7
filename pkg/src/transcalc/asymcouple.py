"""Value group elements of transseries and the maps gamma -> gamma', gamma -> gamma†.

A :class:`GammaElt` is ``v(m)`` for a monomial ``m``.  The order is the
reverse of the monomial order: ``v(f) >= v(g)`` iff ``f <= g``
asymptotically.
"""

from . import errors
from .calculus import integral_monomial, monomial_derivative, monomial_logderiv
from .series import ONE_MONO, Transseries, dominant_term, mono_cmp


class GammaElt:
    __slots__ = ("monomial",)

    def __init__(self, monomial):
        self.monomial = monomial

    @classmethod
    def zero(cls):
        return cls(ONE_MONO)

    def __eq__(self, other):
        return isinstance(other, GammaElt) and self.monomial == other.monomial

    def __hash__(self):
        return hash(("gamma", self.monomial))

    def __repr__(self):
        from .fmt import format_monomial
        return f"v({format_monomial(self.monomial)})"

    def _cmp(self, other):
        return -mono_cmp(self.monomial, other.monomial)

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __add__(self, other):
        return GammaElt(self.monomial * other.monomial)

    def __neg__(self):
        return GammaElt(self.monomial.inverse())

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, r):
        return GammaElt(self.monomial ** r)

    def is_zero(self):
        return self.monomial.is_one()

    def prime(self):
        """``gamma' = v(a')`` for any ``a`` with ``v(a) = gamma``."""
        if self.is_zero():
            raise errors.GammaPrimeUndefinedAtZero("0' is undefined")
        return GammaElt(monomial_derivative(self.monomial).terms[0][0])

    def dagger(self):
        """``gamma† = gamma' - gamma = v(a†)``."""
        if self.is_zero():
            raise errors.GammaPrimeUndefinedAtZero("0† is undefined")
        return GammaElt(monomial_logderiv(self.monomial).terms[0][0])


def v(f):
    """Valuation of a nonzero transseries."""
    if isinstance(f, Transseries):
        if f.is_zero():
            raise errors.ZeroArgument("v(0) is infinite")
        return GammaElt(dominant_term(f)[0])
    return GammaElt(f)


def gamma_data(f):
    """``(gamma, gamma', gamma†)`` for ``gamma = v(f)``, f not asymptotic to a constant."""
    g = v(f)
    return g, g.prime(), g.dagger()


def psi(g):
    return g.dagger()


def asy_integral_gamma(g):
    """``v(y)`` for an asymptotic integral y of an element of valuation ``g``."""
    return GammaElt(integral_monomial(g.monomial)[0])
