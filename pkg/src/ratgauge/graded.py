"""Finitely supported degree -> rank tables, tagged by the space they describe."""

from __future__ import annotations

import enum
from collections.abc import Iterator, Mapping


class SpaceTag(enum.Enum):
    G = "g"
    G0 = "g0"
    GAUGE = "gauge"
    GAUGE_TILDE = "gauge-tilde"
    B_TILDE = "b-tilde"
    B_TILDE_STAR = "b-tilde-star"
    B_STAR = "b-star"
    BG = "bg"

    @property
    def parity(self) -> int:
        """1 if nonzero ranks live in odd degrees, 0 if in even degrees."""
        return _PARITY[self]

    @property
    def canonical(self) -> SpaceTag:
        """The tag whose tables this one shares rationally."""
        return _ALIASES.get(self, self)


_ODD_TAGS = frozenset({SpaceTag.G, SpaceTag.G0, SpaceTag.GAUGE, SpaceTag.GAUGE_TILDE})
_PARITY = {tag: int(tag in _ODD_TAGS) for tag in SpaceTag}
_ALIASES = {
    SpaceTag.GAUGE_TILDE: SpaceTag.GAUGE,
    SpaceTag.B_TILDE_STAR: SpaceTag.B_TILDE,
}


class GradedRanks(Mapping[int, int]):
    """Ranks of rational homotopy groups, ``degree -> rk pi_degree``.

    Missing degrees read as zero.  Zero entries are dropped on construction
    and the parity of the support is checked against ``tag``.
    """

    __slots__ = ("_entries", "tag")

    def __init__(self, entries: Mapping[int, int] | None = None, tag: SpaceTag = SpaceTag.G):
        clean: dict[int, int] = {}
        parity = _PARITY[tag]
        for degree, rank in (entries or {}).items():
            if rank < 0:
                raise ValueError(f"negative rank {rank} at degree {degree}")
            if rank == 0:
                continue
            if degree < 1:
                raise ValueError(f"degree must be >= 1, got {degree}")
            if degree % 2 != parity:
                raise ValueError(
                    f"{tag.value}: rank {rank} in degree {degree} violates parity"
                )
            clean[int(degree)] = int(rank)
        self._entries = dict(sorted(clean.items()))
        self.tag = tag

    def __getitem__(self, degree: int) -> int:
        return self._entries.get(degree, 0)

    def __iter__(self) -> Iterator[int]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def items(self):
        return self._entries.items()

    def keys(self):
        return self._entries.keys()

    def values(self):
        return self._entries.values()

    def __contains__(self, degree: object) -> bool:
        return degree in self._entries

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GradedRanks):
            return self.tag == other.tag and dict(self._entries) == dict(other._entries)
        if isinstance(other, Mapping):
            return dict(self._entries) == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.tag, tuple(self._entries.items())))

    def __repr__(self) -> str:
        return f"GradedRanks({dict(self._entries)!r}, tag={self.tag.name})"

    def total(self) -> int:
        return sum(self._entries.values())

    def max_degree(self) -> int:
        return max(self._entries, default=0)

    def pairs(self) -> list[tuple[int, int]]:
        return list(self._entries.items())

    def dense(self, upto: int) -> list[int]:
        """``[rank(0), rank(1), ..., rank(upto)]``."""
        out = [0] * (upto + 1)
        for d, r in self._entries.items():
            if d <= upto:
                out[d] = r
        return out

    def retag(self, tag: SpaceTag) -> GradedRanks:
        return GradedRanks(self._entries, tag)

    def shifted(self, by: int, tag: SpaceTag) -> GradedRanks:
        """Move every entry up by ``by`` degrees; entries landing below 1 are dropped."""
        return GradedRanks(
            {d + by: r for d, r in self._entries.items() if d + by >= 1}, tag
        )
