"""Composition and functional inverses."""

from transcalc import compose, ell, exp, inverse_comp, localcontext, x_series

x = x_series()

print("(x + log x) o (x log x) =", compose(x + ell(1), x * ell(1)))
print("inverse of e^x =", inverse_comp(exp(x)))

with localcontext(term_budget=5):
    h = inverse_comp(x * ell(1))
    print("inverse of x log x =", h)
    # the composite agrees with x up to the tail
    print("(x log x) o h =", compose(x * ell(1), h))
