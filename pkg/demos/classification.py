"""
Low-degree classification diagnostics
=====================================

Positive L-data are classified by degree below 2: degree 0 is trivial,
the open intervals (0, 1) and (1, 2) are empty, and degree 1 means a
Dirichlet L-function up to an imaginary shift.  The classifier runs the
degree gate, then (in degree 1) detects coefficient periodicity and
matches a primitive character together with the shift t.

The same gate powers statements about vanishing orders: a unitary cuspidal
degree-n completed L-function has infinitely many zeros of order not
divisible by k whenever n/k < 2, because otherwise the (1/k)-scaled datum
would be positive with a forbidden degree.
"""

from ldata import (
    CoefficientStream,
    build_dirichlet,
    build_zeta,
    bundled_zeta_zeros,
    classify,
    combine,
    degree_gate,
    detect_periodicity,
    match_character,
    primitive_characters,
    triviality_diagnostic,
    vanishing_order_gate,
)

# The degree gate alone.
print("degree   verdict")
for d in (0.0, 0.5, 1.0, 1.5, 2.0, 3.0):
    print(f"{d:5.2f}    {degree_gate(d).category}")

# Full pipeline on a Dirichlet datum: degree 1, periodic coefficients,
# character recovered exactly.
chi = primitive_characters(4)[0]
verdict = classify(build_dirichlet(4, chi.index), N=400)
print()
print("chi mod 4 datum:", verdict.category)
print(" ", verdict.evidence)

# Shifted coefficients a(n) = chi(n) n^{-it} are no longer periodic, but the
# matcher still recovers (chi, t).
shifted = CoefficientStream.from_function(lambda n: chi(n) * n ** (-0.75j), "a")
print()
print("periodicity of the shifted stream:", detect_periodicity(shifted, 200, 20))
match = match_character(shifted, 4, 300)
print(f"matched: modulus {match.modulus}, index {match.index}, t = {match.t:.9f}")

# Triviality diagnostics distinguish zeta from zeta - zeta.
zeta = build_zeta(zeros=bundled_zeta_zeros())
print()
print("zeta          :", triviality_diagnostic(zeta, 5000).verdict)
print("zeta - zeta   :", triviality_diagnostic(
    combine([(1.0, zeta), (-1.0, zeta)]), 5000).verdict)

# Vanishing-order gates, including the showpiece (163, 82).
print()
for n, k in ((163, 82), (3, 2), (4, 3), (4, 2)):
    result = vanishing_order_gate(n, k)
    print(f"(n, k) = ({n:3d}, {k:2d}): {'holds' if result.holds else 'inconclusive'}")
    print("   ", result.explanation)
