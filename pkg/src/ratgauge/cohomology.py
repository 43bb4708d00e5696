"""Rational cohomology of gauge groups and connection spaces as free algebras.

All spaces handled here are formal: their cohomology is free graded
commutative (exterior on odd generators for the gauge groups, polynomial on
even generators for the classifying-type spaces), and the minimal model is
that algebra with zero differential.  Generator counts per degree are the
rational homotopy ranks of :mod:`ratgauge.homotopy`.
"""

from __future__ import annotations

import enum
from collections import Counter
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from types import MappingProxyType

from ratgauge.graded import GradedRanks, SpaceTag
from ratgauge.homotopy import (
    BaseData,
    Connectivity,
    connectivity_report,
    ranks_BG,
    ranks_B_star,
    ranks_B_tilde,
    ranks_G,
    ranks_G0,
    ranks_gauge,
)
from ratgauge.liegroups import GroupSpec

__all__ = [
    "AlgebraKind",
    "FreeGradedAlgebra",
    "MinimalModel",
    "DirectSumDescription",
    "PI0_SYMBOL",
    "cohomology_G",
    "cohomology_G0",
    "cohomology_gauge_identity",
    "cohomology_B_tilde",
    "cohomology_B_star",
    "cohomology_BG",
    "cohomology_for",
    "minimal_model",
    "cohomology_full_gauge",
]

PI0_SYMBOL = "|π₀(𝒢)|"


class AlgebraKind(enum.Enum):
    EXTERIOR = "exterior"
    POLYNOMIAL = "polynomial"
    MIXED_FREE = "mixed-free"


@dataclass(frozen=True)
class FreeGradedAlgebra:
    """Free graded-commutative algebra given by generator counts per degree.

    The kind is derived from parities.  The trivial algebra ``Q`` has no
    generators and is reported as polynomial (and is also exterior).
    """

    generators: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for d, c in dict(self.generators).items():
            if d < 1:
                raise ValueError(f"generator degree must be >= 1, got {d}")
            if c < 0:
                raise ValueError(f"negative generator count at degree {d}")
            if c:
                clean[int(d)] = int(c)
        object.__setattr__(self, "generators", MappingProxyType(dict(sorted(clean.items()))))

    @classmethod
    def from_ranks(cls, ranks: GradedRanks) -> FreeGradedAlgebra:
        return cls(dict(ranks.items()))

    @classmethod
    def from_degrees(cls, degrees: Iterable[int]) -> FreeGradedAlgebra:
        return cls(Counter(degrees))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FreeGradedAlgebra):
            return NotImplemented
        return dict(self.generators) == dict(other.generators)

    def __hash__(self) -> int:
        return hash(tuple(self.generators.items()))

    def __repr__(self) -> str:
        return f"FreeGradedAlgebra({dict(self.generators)!r}, kind={self.kind.value})"

    @property
    def kind(self) -> AlgebraKind:
        odd = any(d % 2 for d in self.generators)
        even = any(d % 2 == 0 for d in self.generators)
        if odd and even:
            return AlgebraKind.MIXED_FREE
        return AlgebraKind.EXTERIOR if odd else AlgebraKind.POLYNOMIAL

    @property
    def is_trivial(self) -> bool:
        return not self.generators

    @property
    def num_generators(self) -> int:
        return sum(self.generators.values())

    def degrees(self) -> list[int]:
        """Generator degrees as a sorted multiset."""
        return [d for d, c in self.generators.items() for _ in range(c)]

    def pairs(self) -> list[tuple[int, int]]:
        return list(self.generators.items())

    def count(self, degree: int) -> int:
        return self.generators.get(degree, 0)

    def total_dimension(self) -> int | None:
        """``dim_Q`` of the whole algebra, or ``None`` when it is infinite."""
        if any(d % 2 == 0 for d in self.generators):
            return None
        return 2 ** self.num_generators

    def tensor(self, other: FreeGradedAlgebra) -> FreeGradedAlgebra:
        merged = Counter(self.generators)
        merged.update(other.generators)
        return FreeGradedAlgebra(merged)

    __matmul__ = tensor


@dataclass(frozen=True)
class MinimalModel:
    """Sullivan minimal model ``(ΛV, d)``; for formal free algebras ``d = 0``."""

    algebra: FreeGradedAlgebra
    # generator -> image; empty means d vanishes identically
    differential: Mapping[str, object] = field(default_factory=dict)

    def __post_init__(self):
        if self.differential:
            raise ValueError("free cohomology algebras here have zero differential")

    @property
    def is_formal(self) -> bool:
        return not self.differential


@dataclass(frozen=True)
class DirectSumDescription:
    """``H*(𝒢)`` as a direct sum of copies of the identity-component algebra.

    ``copies`` is ``1`` when the gauge group is known to be connected and
    ``None`` when only finiteness of ``π₀`` is known.
    """

    summand: FreeGradedAlgebra
    copies: int | None

    @property
    def copies_label(self) -> str:
        return str(self.copies) if self.copies is not None else PI0_SYMBOL


def cohomology_G(g: GroupSpec) -> FreeGradedAlgebra:
    """Hopf: exterior on generators of degree ``2k - 1``, one per exponent."""
    return FreeGradedAlgebra.from_ranks(ranks_G(g))


def cohomology_G0(g: GroupSpec, base: BaseData | int) -> FreeGradedAlgebra:
    """Identity component of the based gauge group."""
    return FreeGradedAlgebra.from_ranks(ranks_G0(g, base))


def cohomology_gauge_identity(g: GroupSpec, base: BaseData | int) -> FreeGradedAlgebra:
    """``H*(𝒢ᵉ)``, also valid for the extended gauge group."""
    return FreeGradedAlgebra.from_ranks(ranks_gauge(g, base))


def cohomology_B_tilde(g: GroupSpec, base: BaseData | int) -> FreeGradedAlgebra:
    """Polynomial; ``B̃*`` is weakly equivalent and has the same algebra."""
    return FreeGradedAlgebra.from_ranks(ranks_B_tilde(g, base))


def cohomology_BG(g: GroupSpec) -> FreeGradedAlgebra:
    # one generator in degree 2k per exponent k, i.e. rk pi_{j-1}(G) in degree j
    return FreeGradedAlgebra.from_ranks(ranks_BG(g))


def cohomology_B_star(g: GroupSpec, base: BaseData | int) -> FreeGradedAlgebra:
    return FreeGradedAlgebra.from_ranks(ranks_B_star(g, base))


def cohomology_for(tag: SpaceTag, g: GroupSpec, base: BaseData | int) -> FreeGradedAlgebra:
    tag = tag.canonical
    if tag is SpaceTag.G:
        return cohomology_G(g)
    if tag is SpaceTag.BG:
        return cohomology_BG(g)
    if tag is SpaceTag.G0:
        return cohomology_G0(g, base)
    if tag is SpaceTag.GAUGE:
        return cohomology_gauge_identity(g, base)
    if tag is SpaceTag.B_TILDE:
        return cohomology_B_tilde(g, base)
    return cohomology_B_star(g, base)


def minimal_model(a: FreeGradedAlgebra) -> MinimalModel:
    return MinimalModel(a)


def cohomology_full_gauge(g: GroupSpec, base: BaseData | int) -> DirectSumDescription:
    copies = 1 if connectivity_report(g) is Connectivity.CONNECTED else None
    return DirectSumDescription(cohomology_gauge_identity(g, base), copies)
