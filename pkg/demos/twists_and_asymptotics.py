"""
Exponential sums, nonlinear twists, and the gamma-factor template
=================================================================

The degree classification rests on the boundary behaviour of the sum
S(z) = sum a(n) e^{2 pi i n z} and its nonlinear twists, together with a
large-|s| template for the log of the gamma factor whose leading
coefficient is the degree.  This script exercises all three numerically.
"""

import math

import numpy as np

from ldata import (
    CoefficientStream,
    TwistSpec,
    build_from_spec,
    build_zeta,
    combine,
    g_factor,
    gamma_asymptotics,
    s_sum,
    twist_sum,
)

zeta = build_zeta()

# For zeta, a(n) = 1 and S(iy) is a geometric series with closed form
# 1 / (e^{2 pi y} - 1).
print("y      S(iy) computed        closed form           tail bound")
for y in (0.5, 1.0, 2.0):
    result = s_sum(zeta, 1j * y)
    closed = 1.0 / (math.exp(2.0 * math.pi * y) - 1.0)
    print(f"{y:4.2f}  {result.value.real:.15e}  {closed:.15e}  {result.tail_bound:.1e}")

# A nonlinear twist with exponent 1/2: sum e^{-2 pi sqrt(n)} at z = i.
sqrt_twist = twist_sum(zeta, 1j, TwistSpec((0.5,), (1.0,)))
brute = np.sum(np.exp(-2.0 * math.pi * np.sqrt(np.arange(1.0, 50_001.0))))
print()
print(f"sqrt twist at z = i : {sqrt_twist.value.real:.15e} ({sqrt_twist.terms} terms)")
print(f"direct summation    : {brute:.15e}")

# The gamma-factor template: fitted d is the degree, the conductor moves
# c_{-1} only, and the residual drops with the template order.
print()
print("fit of log gamma_F(s) = (s-1/2)(d/2 log(s/e) + c_-1) + mu/2 log(s/2) + ...")
specs = {
    "zeta": zeta,
    "two shifts": build_from_spec(0.0, [0.0, 1.0], CoefficientStream.zero("f")),
    "half of three": combine(
        [(0.5, build_from_spec(0.0, [0.0, 0.0, 1.0], CoefficientStream.zero("f")))]
    ),
}
for name, F in specs.items():
    fit = gamma_asymptotics(F, order=4)
    print(f"{name:14s} d = {fit.d:.9f}  c_-1 = {fit.c_minus1:+.6f}  "
          f"mu = {fit.mu:+.4f}  residual = {fit.fit_residual:.1e}")

print()
print("residual vs order for the zeta spec:")
for order in range(1, 6):
    print(f"  order {order}: {gamma_asymptotics(zeta, order).fit_residual:.2e}")

# The Mellin factor G(s) of the linear twist, at the fitted zeta constants:
# d = 1, c_-1 = -log(2 pi)/2, mu = -1/2.
fit = gamma_asymptotics(zeta, order=4)
print()
print(f"G(1/2) at the zeta constants = "
      f"{g_factor(0.5, fit.d, fit.c_minus1, fit.mu):.9f}")
print(f"G(2)                         = "
      f"{g_factor(2.0, fit.d, fit.c_minus1, fit.mu):.9f}")
