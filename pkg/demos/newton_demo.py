"""Differential polynomials, Newton polynomials and v_P."""

from transcalc import DiffPoly, dp_eval, equalize, log_decompose, newton_poly, vP_eval, x_series

x = x_series()
Y, Y1, Y2, Y3 = (DiffPoly.var(k) for k in range(4))

P = 2 * Y1 * Y3 - 3 * Y2 * Y2
print("P =", P)
print("P(x^2) =", dp_eval(P, x * x))

trace = []
print("N(Y'') =", newton_poly(Y2, trace=trace))
for n, N in enumerate(trace):
    print(f"  after conjugating by phi_{n}: {N}")
print("N(Y' - Y) =", newton_poly(Y1 - Y))

print("log decomposition of Y'':", log_decompose(Y2).coeffs)
print("v_{Y'}(x) =", vP_eval(Y1, x.terms[0][0]))

g = equalize(x * x * Y * Y, Y)
print("equalizer of x^2 Y^2 and Y:", g)
