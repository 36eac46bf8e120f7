"""Exact arithmetic on transseries with a term budget."""

from transcalc import cmp, ell, exp, inv, localcontext, nth_root, sign, x_series

x = x_series()

# 1/(x - x^2 e^-x) expands geometrically in x e^-x
with localcontext(term_budget=3):
    print("1/(x - x^2 e^-x) =", inv(x - x * x * exp(-x)))

# sqrt(1 + 1/x) uses the binomial series
with localcontext(term_budget=4):
    print("sqrt(1 + 1/x) =", nth_root(1 + inv(x), 2))

# e^(e^x) dominates 3 e^(x^2), so the difference is positive
print("sign(e^e^x - 3 e^(x^2)) =", sign(exp(exp(x)) - 3 * exp(x * x)))
print("cmp(x, x + log x) =", cmp(x, x + ell(1)))
