"""Exact arithmetic, calculus and differential algebra for transseries.

The value type is :class:`Transseries`; operations either produce exact
results or carry an explicit ``O(monomial)`` tail bounding what the term
budget of the active :class:`Context` cut off.
"""

from .asymcouple import GammaElt, asy_integral_gamma, gamma_data, psi, v
from .calculus import (
    asy_int_leading, compose, derive, derive_n, exp, integral_monomial, integrate,
    inverse_comp, iterated_exp, log, logderiv, small_int, solve_linear1,
)
from .context import Context, getcontext, localcontext
from .diffalg import (
    Bounds, DiffPoly, LinOp, LogDecomposition, NewtonPoly, below_omega_cofinal,
    comp_conjugate, dp_eval, equalize, eval_logmono, in_I, in_I_direct, in_Lambda,
    lambda_seq, linop_apply, linop_from_dp, linop_mul, linop_to_dp, log_decompose,
    newton_poly, omega_map, omega_seq, osc_criterion, schwarzian, theta, vP_eval,
)
from .errors import *  # noqa: F401,F403
from .fmt import format_series
from .parser import parse
from .series import (
    AsymptoticRelation, Monomial, Transseries, add, agrees, asy_compare, chain_monomial,
    cmp, const, div, dominant_monomial, dominant_term, ell, ell_monomial, inv, is_prefix,
    mono_cmp, mul, neg, nth_root, power, prec, preceq, sign, similar, split,
    standard_part, sub, x_series,
)

__version__ = "0.1.0"
