"""
Betti numbers from Poincare series
==================================

The cohomology algebras are free, so their Poincare series are products of
(1 + t^d) over odd generators divided by products of (1 - t^e) over even
ones.  The expansion is exact; coefficients for large groups quickly
outgrow machine integers.
"""

from ratgauge import cohomology_B_star, cohomology_gauge_identity, expand, parse_group_spec, poincare_series

###############################################################################
# B* for SU(2) over a K3 surface (b2 = 22)

series = poincare_series(cohomology_B_star(parse_group_spec("SU(2)"), 22))
print("series:", series)
print("b_0..b_12:", expand(series, 12))

###############################################################################
# The gauge group is an exterior algebra: total dimension 2^(#generators),
# which is the numerator evaluated at t = 1

a = cohomology_gauge_identity(parse_group_spec("G2"), 2)
s = poincare_series(a)
print("G2, b2=2:", a.num_generators, "generators, total dimension", s.numerator_at_one())

###############################################################################
# Exact big integers

coeffs = expand(poincare_series(cohomology_B_star(parse_group_spec("E8"), 22)), 120)
print("dim H^120(B*) for E8, b2=22:", coeffs[120])
