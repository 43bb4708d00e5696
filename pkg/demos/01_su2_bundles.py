"""
SU(2)-bundles over a four-manifold
==================================

The smallest structure group.  SU(2) has a single exponent, 2, so its only
rational homotopy group is pi_3.  Everything else follows from b2(M).
"""

from ratgauge import (
    cohomology_B_star,
    cohomology_B_tilde,
    cohomology_gauge_identity,
    connectivity_report,
    parse_group_spec,
    ranks_B_star,
    ranks_B_tilde,
    ranks_G0,
    ranks_gauge,
)

G = parse_group_spec("SU(2)")
b2 = 3  # e.g. the connected sum of three copies of CP^2

###############################################################################
# Rational homotopy ranks, degree -> rank

print("G0 :", dict(ranks_G0(G, b2)))
print("Gauge :", dict(ranks_gauge(G, b2)))
print("B~ :", dict(ranks_B_tilde(G, b2)))
print("B* :", dict(ranks_B_star(G, b2)))

###############################################################################
# Cohomology: polynomial on b2 classes of degree 2, plus one of degree 4 for B*

print("H*(B~) generators:", cohomology_B_tilde(G, b2).degrees())
print("H*(B*) generators:", cohomology_B_star(G, b2).degrees())

###############################################################################
# The identity component of the gauge group is exterior on b2 classes of
# degree 1 and one of degree 3.  pi_4(SU(2)) = Z/2, so the number of
# components is finite but not pinned down.

print("H*(Gauge^e) generators:", cohomology_gauge_identity(G, b2).degrees())
print("connectivity:", connectivity_report(G).value)
