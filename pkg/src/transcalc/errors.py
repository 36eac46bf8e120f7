"""Exception hierarchy.

Every error carries a stable ``code`` used by the command line front end
when rendering diagnostics.
"""


class TransseriesError(ArithmeticError):
    code = "E_KERNEL"


class DivisionByZero(TransseriesError, ZeroDivisionError):
    code = "E_DIV_ZERO"


class IndeterminateSign(TransseriesError):
    """The value has no listed terms, only an O-tail; raise the term budget."""
    code = "E_INDETERMINATE"


class LimitExceeded(TransseriesError):
    code = "E_LIMIT"


class NegativeLeading(TransseriesError):
    code = "E_NEGATIVE_LEADING"


class CoeffNotRepresentable(TransseriesError):
    """A coefficient would leave the rationals (for instance sqrt(2))."""
    code = "E_COEFF_NOT_RATIONAL"


class ConstantTermNotRepresentable(CoeffNotRepresentable):
    """exp(c) or log(c) with c a rational other than 0 resp. 1."""
    code = "E_CONST_NOT_RATIONAL"


class NotPositive(TransseriesError):
    code = "E_NOT_POSITIVE"


class NotPositivelyInfinite(TransseriesError):
    code = "E_NOT_INFINITE"


class UndefinedOnZero(TransseriesError):
    code = "E_ZERO_ARGUMENT"


class ZeroHasNoDominantTerm(UndefinedOnZero):
    code = "E_ZERO_DOMINANT"


class ZeroArgument(UndefinedOnZero):
    code = "E_ZERO_ARGUMENT"


class GammaPrimeUndefinedAtZero(TransseriesError):
    code = "E_GAMMA_ZERO"


class UndefinedLogDerivative(TransseriesError):
    code = "E_LOGDERIV"


class NonConstantRequired(TransseriesError):
    code = "E_CONSTANT"


class NoConvergenceWithinBudget(TransseriesError):
    code = "E_NO_CONVERGENCE"


class UnsupportedInverse(TransseriesError):
    """Compositional inversion of a shape the seeding step does not handle."""
    code = "E_UNSUPPORTED_INVERSE"


class NoStabilization(TransseriesError):
    code = "E_NO_STABILIZATION"


class NotHomogeneous(TransseriesError):
    code = "E_NOT_HOMOGENEOUS"


class NotFoundWithinBounds(TransseriesError):
    code = "E_NOT_FOUND"


# ---------------------------------------------------------------- front end

class ParseError(Exception):
    """Raised by the expression parser; ``pos`` is a 0-based offset."""
    code = "E_PARSE"

    def __init__(self, msg, pos=None):
        super().__init__(msg)
        self.pos = pos


class SyntaxError(ParseError):  # noqa: A001 (shadows the builtin inside this module only)
    code = "E_SYNTAX"


class UnknownFunction(ParseError):
    code = "E_UNKNOWN_FUNCTION"


class ArityError(ParseError):
    code = "E_ARITY"


class EvalTypeError(TransseriesError):
    """An operation was applied to a value of the wrong kind."""
    code = "E_TYPE"


class UnboundName(TransseriesError):
    code = "E_UNBOUND"
