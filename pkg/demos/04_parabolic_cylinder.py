"""Parabolic cylinder functions and their ladder structure.

D_lambda solves the Weber equation D'' + (lambda + 1/2 - x^2/4) D = 0;
the rescaled family F_lambda(z) = D_lambda(sqrt 2 z) is moved up and
down by (z -+ d/dz)/sqrt 2, which is what makes it an eigenbasis for the
Schroedinger-type gauge generator.
"""

import numpy as np

from kreinccr import hermite_closed_form, ladder_check, weber_D
from kreinccr.pcf import weber_ode_residual

grid = np.arange(-3.0, 3.01, 0.25)

for lam in (-0.9, -0.5, 0.0, 0.3, 2.7):
    up, down = ladder_check(lam, grid)
    ode = max(weber_ode_residual(lam, x) for x in grid)
    print(f"lambda = {lam:5}:  raising {up:.2e}  lowering {down:.2e}  "
          f"ODE {ode:.2e}")

print("\ninteger orders match Hermite closed forms:")
for n in (0, 1, 4, 8):
    x = 1.3
    got = weber_D(float(n), x).value
    want = hermite_closed_form(n, x)
    print(f"  D_{n}(1.3) = {got:.12g}   (Hermite: {want:.12g})")

v = weber_D(-0.5, 2.0)
print(f"\nD_(-1/2)(2) = {v.value:.15g}, derivative {v.derivative:.15g}, "
      f"series error estimate {v.est_error:.1e}")
