"""Rational homotopy ranks of gauge groups and moduli of connections.

Every table is built degree by degree from ``rk pi_*(G)`` and ``b2(M)``:

==============  ====================================================
space           ``rk pi_j`` for ``j >= 1``
==============  ====================================================
``G0``          ``b2 * rk pi_{j+2}(G) + rk pi_{j+4}(G)``
``Gauge``       ``G0(j) + rk pi_j(G)``  (the same for the extended group)
``BTilde``      ``b2 * rk pi_{j+1}(G) + rk pi_{j+3}(G)``  (= ``G0(j-1)``)
``BStar``       ``BTilde(j) + rk pi_{j-1}(G)``  (= ``Gauge(j-1)``)
==============  ====================================================

Totals are obtained by summing these tables.  For a product of ``s``
simple factors they come out as ``(b2 + c) * rk G - s``, which is the
familiar ``- 1`` only for simple ``G``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from ratgauge.graded import GradedRanks, SpaceTag
from ratgauge.liegroups import GroupSpec, rational_homotopy

__all__ = [
    "BaseData",
    "Connectivity",
    "ranks_G",
    "ranks_BG",
    "ranks_G0",
    "ranks_gauge",
    "ranks_gauge_tilde",
    "ranks_B_tilde",
    "ranks_B_tilde_star",
    "ranks_B_star",
    "ranks_for",
    "connectivity_report",
]


@dataclass(frozen=True)
class BaseData:
    """The only datum of the four-manifold the formulas use: ``b2(M)``.

    ``b2 = 0`` is the four-sphere.
    """

    b2: int

    def __post_init__(self):
        if isinstance(self.b2, bool) or not isinstance(self.b2, int):
            raise TypeError(f"b2 must be an int, got {type(self.b2).__name__}")
        if self.b2 < 0:
            raise ValueError(f"b2 must be >= 0, got {self.b2}")


class Connectivity(enum.Enum):
    CONNECTED = "connected"
    FINITE_UNKNOWN = "finite-unknown"


def _as_base(base: BaseData | int) -> BaseData:
    return base if isinstance(base, BaseData) else BaseData(base)


def _mapping_space_ranks(g: GroupSpec, b2: int, offset: int, tag: SpaceTag) -> GradedRanks:
    # rank at j is b2 * rk pi_{j+offset}(G) + rk pi_{j+offset+2}(G), j >= 1
    pi = rational_homotopy(g)
    out: dict[int, int] = {}
    for d, r in pi.items():
        for j, weight in ((d - offset, b2), (d - offset - 2, 1)):
            if j >= 1 and weight:
                out[j] = out.get(j, 0) + weight * r
    return GradedRanks(out, tag)


def ranks_G(g: GroupSpec) -> GradedRanks:
    return rational_homotopy(g)


def ranks_BG(g: GroupSpec) -> GradedRanks:
    return rational_homotopy(g).shifted(1, SpaceTag.BG)


def ranks_G0(g: GroupSpec, base: BaseData | int) -> GradedRanks:
    """Based gauge group: ``b2 * rk pi_{j+2}(G) + rk pi_{j+4}(G)``."""
    return _mapping_space_ranks(g, _as_base(base).b2, 2, SpaceTag.G0)


def ranks_gauge(g: GroupSpec, base: BaseData | int, tag: SpaceTag = SpaceTag.GAUGE) -> GradedRanks:
    """Full gauge group: the based table plus ``rk pi_j(G)``."""
    g0 = ranks_G0(g, base)
    pi = rational_homotopy(g)
    degrees = set(g0) | set(pi)
    return GradedRanks({j: g0[j] + pi[j] for j in degrees}, tag)


def ranks_gauge_tilde(g: GroupSpec, base: BaseData | int) -> GradedRanks:
    return ranks_gauge(g, base, SpaceTag.GAUGE_TILDE)


def ranks_B_tilde(g: GroupSpec, base: BaseData | int, tag: SpaceTag = SpaceTag.B_TILDE) -> GradedRanks:
    """``A / G0``: ``b2 * rk pi_{j+1}(G) + rk pi_{j+3}(G)``."""
    return _mapping_space_ranks(g, _as_base(base).b2, 1, tag)


def ranks_B_tilde_star(g: GroupSpec, base: BaseData | int) -> GradedRanks:
    return ranks_B_tilde(g, base, SpaceTag.B_TILDE_STAR)


def ranks_B_star(g: GroupSpec, base: BaseData | int) -> GradedRanks:
    """Irreducible connections mod the full gauge group: adds ``rk pi_{j-1}(G)``."""
    bt = ranks_B_tilde(g, base)
    bg = ranks_BG(g)
    degrees = set(bt) | set(bg)
    return GradedRanks({j: bt[j] + bg[j] for j in degrees}, SpaceTag.B_STAR)


def ranks_for(tag: SpaceTag, g: GroupSpec, base: BaseData | int) -> GradedRanks:
    """Dispatch on a space tag."""
    if tag is SpaceTag.G:
        return ranks_G(g)
    if tag is SpaceTag.BG:
        return ranks_BG(g)
    if tag is SpaceTag.G0:
        return ranks_G0(g, base)
    if tag in (SpaceTag.GAUGE, SpaceTag.GAUGE_TILDE):
        return ranks_gauge(g, base, tag)
    if tag in (SpaceTag.B_TILDE, SpaceTag.B_TILDE_STAR):
        return ranks_B_tilde(g, base, tag)
    return ranks_B_star(g, base)


def connectivity_report(g: GroupSpec) -> Connectivity:
    """Whether the gauge groups are connected.

    With ``pi_4(G) = 0`` the based gauge group, and with it the full one, is
    connected.  Otherwise only finiteness of ``pi_0`` is known.
    """
    return Connectivity.CONNECTED if g.pi4_is_trivial else Connectivity.FINITE_UNKNOWN
