"""The lambda and omega sequences, oscillation and the I/Lambda duality."""

from transcalc import exp, logderiv, in_I, in_Lambda, inv, lambda_seq, omega_seq, osc_criterion, theta, x_series

x = x_series()

for n in range(3):
    print(f"lambda_{n} =", lambda_seq(n))
    print(f"omega_{n} =", omega_seq(n))

# osc(f) holds when f sits below omega_n for large n, which matches
# 4y'' + f y = 0 having a solution; for f = 1/x^2 that solution is sqrt(x)
print("osc(1/x^2) =", osc_criterion(inv(x * x)))
print("osc(x^2) =", osc_criterion(x * x))
print("osc(theta(e^x)) =", osc_criterion(theta(exp(x))))

for f in (exp(-x), inv(x)):
    print(f"{f}: in I = {in_I(f)}, -f'/f in Lambda = {in_Lambda(-logderiv(f))}")
