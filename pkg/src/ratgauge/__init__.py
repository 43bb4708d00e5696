"""Rational homotopy and cohomology of gauge groups and moduli of connections.

Principal ``G``-bundles over a compact simply connected four-manifold ``M``
are determined, for these purposes, by the structure group ``G`` and the
second Betti number ``b2(M)``.  This package turns those two inputs into

* rational homotopy ranks of the gauge groups and connection moduli
  (:mod:`ratgauge.homotopy`),
* their rational cohomology as free algebras (:mod:`ratgauge.cohomology`),
* exact Poincaré series and Betti numbers (:mod:`ratgauge.series`),
* self-checks of the relations tying all of these together
  (:mod:`ratgauge.verify`).
"""

from ratgauge.cohomology import (
    AlgebraKind,
    DirectSumDescription,
    FreeGradedAlgebra,
    MinimalModel,
    cohomology_B_star,
    cohomology_B_tilde,
    cohomology_BG,
    cohomology_for,
    cohomology_full_gauge,
    cohomology_G,
    cohomology_G0,
    cohomology_gauge_identity,
    minimal_model,
)
from ratgauge.graded import GradedRanks, SpaceTag
from ratgauge.homotopy import (
    BaseData,
    Connectivity,
    connectivity_report,
    ranks_B_star,
    ranks_B_tilde,
    ranks_B_tilde_star,
    ranks_BG,
    ranks_for,
    ranks_G,
    ranks_G0,
    ranks_gauge,
    ranks_gauge_tilde,
)
from ratgauge.liegroups import (
    GroupSpec,
    GroupSpecError,
    GroupSyntaxError,
    RankOutOfRange,
    SimpleFactor,
    UnsupportedGroup,
    center_order,
    dimension,
    exponents,
    parse_group_spec,
    pi4_is_trivial,
    rank,
    rational_homotopy,
    render_group_spec,
)
from ratgauge.series import RationalSeries, betti, expand, poincare_series

__version__ = "0.1.0"
