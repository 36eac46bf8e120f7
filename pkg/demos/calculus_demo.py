"""Derivatives, integrals, exp and log."""

from transcalc import derive, ell, exp, integrate, inv, localcontext, log, x_series

x = x_series()

print("d/dx log log x =", derive(ell(2)))

with localcontext(term_budget=4):
    F = integrate(exp(x) / x)
    print("int e^x/x =", F)
    # differentiating gives back e^x/x up to the tail
    print("F' - e^x/x =", derive(F) - exp(x) / x)

print("int log x =", integrate(ell(1)))
with localcontext(term_budget=3):
    print("log(e^x - e^-x) =", log(exp(x) - inv(exp(x))))
