"""
E8-bundles
==========

E8 has exponents 2, 8, 12, 14, 18, 20, 24, 30.  Each exponent k feeds three
families of degrees into the gauge group tables: 2k-3 (weighted by b2),
2k-5 and, for the full gauge group, 2k-1.  Coincidences between those
families give the rank-two entries.
"""

from ratgauge import parse_group_spec, ranks_B_star, ranks_gauge
from ratgauge.report import build_report, render_report

E8 = parse_group_spec("E8")

###############################################################################
# Rank-two entries appear where 2k-1 for one exponent meets 2k'-5 for another

gauge = ranks_gauge(E8, 1)
print("degrees with rank 2 in Gauge (b2 = 1):", [j for j, r in gauge.items() if r == 2 and j != 1])
print("degrees with rank 2 in B* (b2 = 1):", [j for j, r in ranks_B_star(E8, 1).items() if r == 2 and j != 2])

###############################################################################
# Generator counts grow linearly in b2: 8 b2 + 7 for B~ and 8 b2 + 15 for B*

for b2 in range(5):
    bt = build_report(E8, b2, "b-tilde").algebra.total
    bs = build_report(E8, b2, "b-star").algebra.total
    print(f"b2={b2}:  B~ {bt:3d}   B* {bs:3d}")

###############################################################################
# Full report in the LaTeX notation

print(render_report(build_report(E8, 3, "b-star"), "latex"))
