"""
The real-linear structure of L-data
===================================

Explicit formulae add: the formula of a product of L-functions is the sum
of the formulas of its factors, and nothing stops us from scaling by 1/2
or subtracting.  Degree adds, conductor multiplies, and the multiplicity
data merges pointwise.  This is the mechanism behind the vanishing-order
arguments, where a fractional multiple of a datum must land in a forbidden
degree range.
"""

from ldata import (
    CoefficientStream,
    axiom_report,
    build_dirichlet,
    build_from_spec,
    build_zeta,
    bundled_zeta_zeros,
    combine,
    conductor,
    degree,
    degree_numeric,
    positivity_report,
    primitive_characters,
)

zeta = build_zeta(zeros=bundled_zeta_zeros())
chi4 = build_dirichlet(4, primitive_characters(4)[0].index)
gl3 = build_from_spec(0.0, [0.0, 0.0, 1.0], CoefficientStream.zero("f"))

print("datum            degree   numeric degree    conductor")
for name, F in [("zeta", zeta), ("chi mod 4", chi4), ("three shifts", gl3)]:
    numeric, err = degree_numeric(F)
    print(f"{name:15s} {degree(F):7.3f} {numeric:11.6f} +- {err:.0e}  {conductor(F):.6g}")

# Linear combinations: degree is additive, conductor multiplicative.
pair = combine([(1.0, build_zeta()), (1.0, chi4)])
half = combine([(0.5, gl3)])
print()
print(f"degree(zeta + chi4)   = {degree(pair)}")
print(f"degree(gl3 / 2)       = {degree(half)}   <- the forbidden strip (1, 2)")
print(f"Q(zeta + chi4)        = {conductor(pair):.6g}"
      f"  (= {conductor(build_zeta()) * conductor(chi4):.6g})")

# Subtracting a datum from itself leaves the trivial datum: everything
# cancels, including the pole entries.
trivial = combine([(1.0, zeta), (-1.0, zeta)])
print()
print(f"zeta - zeta: degree {degree(trivial)}, "
      f"{len(trivial.zeros.entries)} multiplicity entries, "
      f"f(2) = {trivial.f.eval(2)}")

# Positivity: the completed zeta function has exactly two poles, so its
# datum is positive; a quotient-style datum with ever more negative
# multiplicities is not.
print()
print("positivity of zeta:", positivity_report(zeta).verdict)
print("axiom check of zeta:", axiom_report(zeta, 10_000).verdict)
print()
print(f"scaling: Q(t * zeta) = Q(zeta)^t, e.g. t = 3: "
      f"{conductor(combine([(3.0, zeta)])):.3e} vs {conductor(zeta) ** 3:.3e}")
