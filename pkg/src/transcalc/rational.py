"""The exact rational type used for coefficients and exponents.

gmpy2's ``mpq`` is a drop-in for :class:`fractions.Fraction` (same
hashing, equality and ``p/q`` string form) and an order of magnitude
faster.  Never raise an ``mpq`` to an ``mpq`` power: gmpy2 silently
returns a float for non-integer exponents.  Use
:func:`transcalc.series.rational_power`.
"""

from gmpy2 import mpq as Q

__all__ = ["Q"]
