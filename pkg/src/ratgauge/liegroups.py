"""Compact simply connected simple Lie groups: classification data and parsing.

A :class:`GroupSpec` is a formal product of simple factors drawn from the
nine Cartan families.  Only simply connected forms can be written down, so
every value of this module is a legitimate structure group for the gauge
theory computations downstream.

The exponents ``k`` of a factor are the degrees of its fundamental Weyl
invariants; by Hopf's theorem ``H*(G; Q)`` is exterior on generators of
degree ``2k - 1`` and therefore ``rk pi_{2k-1}(G)`` is the multiplicity of
``k``.
"""

from __future__ import annotations

import enum
import functools
import re
from collections import Counter
from dataclasses import dataclass, field

from ratgauge.graded import GradedRanks, SpaceTag

__all__ = [
    "Family",
    "SimpleFactor",
    "GroupSpec",
    "GroupSpecError",
    "GroupSyntaxError",
    "UnsupportedGroup",
    "RankOutOfRange",
    "parse_group_spec",
    "render_group_spec",
    "simple_factors",
    "exponents",
    "rank",
    "dimension",
    "center_order",
    "pi4_is_trivial",
    "rational_homotopy",
]


class GroupSpecError(ValueError):
    """Base class for everything :func:`parse_group_spec` can reject."""


class GroupSyntaxError(GroupSpecError):
    pass


class UnsupportedGroup(GroupSpecError):
    pass


class RankOutOfRange(GroupSpecError):
    pass


class Family(enum.Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    G2 = "G2"
    F4 = "F4"
    E6 = "E6"
    E7 = "E7"
    E8 = "E8"

    @property
    def is_classical(self) -> bool:
        return self in (Family.A, Family.B, Family.C, Family.D)


_EXCEPTIONAL_RANK = {Family.G2: 2, Family.F4: 4, Family.E6: 6, Family.E7: 7, Family.E8: 8}

# smallest rank at which each classical family is stored; lower ranks are
# rewritten by simple_factors
_MIN_RANK = {Family.A: 1, Family.B: 3, Family.C: 2, Family.D: 4}

_EXCEPTIONAL_EXPONENTS = {
    Family.G2: (2, 6),
    Family.F4: (2, 6, 8, 12),
    Family.E6: (2, 5, 6, 8, 9, 12),
    Family.E7: (2, 6, 8, 10, 12, 14, 18),
    Family.E8: (2, 8, 12, 14, 18, 20, 24, 30),
}

# Lie algebra dimensions, kept separate from the exponent table so that the
# identity sum(2k - 1) == dim is a genuine check
_EXCEPTIONAL_DIMENSION = {Family.G2: 14, Family.F4: 52, Family.E6: 78, Family.E7: 133, Family.E8: 248}

_EXCEPTIONAL_CENTER = {Family.G2: 1, Family.F4: 1, Family.E6: 3, Family.E7: 2, Family.E8: 1}


def _classical_exponents(family: Family, n: int) -> tuple[int, ...]:
    if family is Family.A:
        return tuple(range(2, n + 2))
    if family in (Family.B, Family.C):
        return tuple(range(2, 2 * n + 1, 2))
    # D_n: 2, 4, ..., 2n-2 together with the Pfaffian degree n
    return tuple(sorted((*range(2, 2 * n - 1, 2), n)))


def _classical_dimension(family: Family, n: int) -> int:
    if family is Family.A:
        return n * (n + 2)
    if family in (Family.B, Family.C):
        return n * (2 * n + 1)
    return n * (2 * n - 1)


@dataclass(frozen=True)
class SimpleFactor:
    """One simple factor, stored in canonical (non-coincident) form.

    ``display_name`` records how the user spelled it and takes no part in
    equality, so ``Sp(1)`` and ``SU(2)`` compare equal.
    """

    family: Family
    rank_param: int
    display_name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.family.is_classical:
            low = _MIN_RANK[self.family]
            if self.rank_param < low:
                raise RankOutOfRange(
                    f"{self.family.value}{self.rank_param} is not a canonical factor "
                    f"(family {self.family.value} needs rank >= {low})"
                )
        elif self.rank_param != _EXCEPTIONAL_RANK[self.family]:
            raise RankOutOfRange(f"{self.family.value} has rank {_EXCEPTIONAL_RANK[self.family]}")
        if not self.display_name:
            object.__setattr__(self, "display_name", self.name)

    @property
    def name(self) -> str:
        """Canonical spelling, e.g. ``SU(3)``, ``Spin(7)``, ``Sp(2)``, ``E8``."""
        n = self.rank_param
        if self.family is Family.A:
            return f"SU({n + 1})"
        if self.family is Family.B:
            return f"Spin({2 * n + 1})"
        if self.family is Family.C:
            return f"Sp({n})"
        if self.family is Family.D:
            return f"Spin({2 * n})"
        return self.family.value

    @property
    def cartan_label(self) -> str:
        if self.family.is_classical:
            return f"{self.family.value}{self.rank_param}"
        return self.family.value

    @property
    def rank(self) -> int:
        return self.rank_param

    @property
    def exponents(self) -> tuple[int, ...]:
        if self.family.is_classical:
            return _classical_exponents(self.family, self.rank_param)
        return _EXCEPTIONAL_EXPONENTS[self.family]

    @property
    def dimension(self) -> int:
        if self.family.is_classical:
            return _classical_dimension(self.family, self.rank_param)
        return _EXCEPTIONAL_DIMENSION[self.family]

    @property
    def center_order(self) -> int:
        if self.family is Family.A:
            return self.rank_param + 1
        if self.family in (Family.B, Family.C):
            return 2
        if self.family is Family.D:
            return 4
        return _EXCEPTIONAL_CENTER[self.family]

    @property
    def pi4_is_trivial(self) -> bool:
        # pi_4(SU(2)) = pi_4(Sp(n)) = Z/2; every other simple factor has pi_4 = 0
        if self.family is Family.C:
            return False
        return not (self.family is Family.A and self.rank_param == 1)


@dataclass(frozen=True)
class GroupSpec:
    """A nonempty product of simple, compact, simply connected factors."""

    factors: tuple[SimpleFactor, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if not self.factors:
            raise GroupSyntaxError("a group needs at least one simple factor")

    def __str__(self) -> str:
        return render_group_spec(self)

    @property
    def num_factors(self) -> int:
        return len(self.factors)

    @property
    def rank(self) -> int:
        return sum(f.rank for f in self.factors)

    @property
    def dimension(self) -> int:
        return sum(f.dimension for f in self.factors)

    @property
    def center_order(self) -> int:
        out = 1
        for f in self.factors:
            out *= f.center_order
        return out

    @property
    def pi4_is_trivial(self) -> bool:
        return all(f.pi4_is_trivial for f in self.factors)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(sorted(k for f in self.factors for k in f.exponents))

    @property
    def max_exponent(self) -> int:
        return max(self.exponents)


def simple_factors(family: Family, n: int, display_name: str = "") -> list[SimpleFactor]:
    """Build the canonical factor list for ``family`` at rank parameter ``n``.

    Low-rank coincidences are rewritten: B1, C1 -> A1; B2 -> C2;
    D2 -> A1 x A1; D3 -> A3.
    """
    if not family.is_classical:
        return [SimpleFactor(family, _EXCEPTIONAL_RANK[family], display_name)]
    if n < 1 or (family is Family.D and n < 2):
        raise RankOutOfRange(f"{display_name or family.value + str(n)}: rank out of range")
    if family in (Family.B, Family.C) and n == 1:
        return [SimpleFactor(Family.A, 1, display_name)]
    if family is Family.B and n == 2:
        return [SimpleFactor(Family.C, 2, display_name)]
    if family is Family.D and n == 2:
        return [SimpleFactor(Family.A, 1, display_name), SimpleFactor(Family.A, 1, display_name)]
    if family is Family.D and n == 3:
        return [SimpleFactor(Family.A, 3, display_name)]
    return [SimpleFactor(family, n, display_name)]


# ---------------------------------------------------------------- parsing

_SEPARATOR = re.compile(r"[xX*×]")
_TERM = re.compile(r"^(?P<atom>[A-Za-z]+\d*(?:\(\d+\))?)(?:\^(?P<power>\d+))?$")
_ATOM = re.compile(r"^(?P<head>[A-Za-z]+)(?P<digit>\d*)(?:\((?P<arg>\d+)\))?$")

_NOT_SIMPLY_CONNECTED = {
    "u": "U(n) has pi_1 = Z and is not semisimple",
    "so": "SO(n) is not simply connected (use Spin(n))",
    "psu": "PSU(n) is an adjoint (quotient) form, not simply connected (use SU(n))",
    "pu": "PU(n) is an adjoint (quotient) form, not simply connected (use SU(n))",
    "pso": "PSO(n) is an adjoint (quotient) form, not simply connected (use Spin(n))",
    "psp": "PSp(n) is an adjoint (quotient) form, not simply connected (use Sp(n))",
    "t": "a torus T^k is not semisimple and not simply connected",
}


def _unsupported(text: str, why: str) -> UnsupportedGroup:
    return UnsupportedGroup(
        f"unsupported structure group {text!r}: {why}. The rank formulas require a "
        "semisimple compact simply connected group (they fail already for a U(3)-bundle "
        "over S^4)."
    )


def _parse_atom(atom: str) -> list[SimpleFactor]:
    m = _ATOM.match(atom)
    if m is None:
        raise GroupSyntaxError(f"cannot parse group factor {atom!r}")
    head = m["head"].lower()
    digit, arg = m["digit"], m["arg"]

    if head in _NOT_SIMPLY_CONNECTED:
        raise _unsupported(atom, _NOT_SIMPLY_CONNECTED[head])

    if digit:
        if arg is not None:
            raise GroupSyntaxError(f"cannot parse group factor {atom!r}")
        label = head.upper() + digit
        try:
            family = Family(label)
        except ValueError:
            raise GroupSyntaxError(f"unknown exceptional group {atom!r}") from None
        if family.is_classical:
            raise GroupSyntaxError(f"write classical groups as SU(n), Spin(n) or Sp(n), not {atom!r}")
        return simple_factors(family, 0, atom)

    if arg is None:
        raise GroupSyntaxError(f"{atom!r} needs an argument, e.g. SU(3)")
    k = int(arg)
    if head == "su":
        if k < 2:
            raise RankOutOfRange(f"{atom}: SU(n) needs n >= 2")
        return simple_factors(Family.A, k - 1, atom)
    if head == "sp":
        if k < 1:
            raise RankOutOfRange(f"{atom}: Sp(n) needs n >= 1")
        return simple_factors(Family.C, k, atom)
    if head == "spin":
        if k < 3:
            raise RankOutOfRange(f"{atom}: Spin(n) needs n >= 3")
        return simple_factors(Family.B if k % 2 else Family.D, k // 2, atom)
    raise GroupSyntaxError(f"unknown group {atom!r}")


def parse_group_spec(text: str) -> GroupSpec:
    """Parse expressions such as ``"SU(2) x E8"``, ``"Spin(7)*Sp(2)^2"``.

    Raises :class:`UnsupportedGroup` for non-simply-connected or
    non-semisimple groups, :class:`RankOutOfRange` for degenerate ranks and
    :class:`GroupSyntaxError` for anything malformed.
    """
    compact = "".join(text.split())
    if not compact:
        raise GroupSyntaxError("empty group expression")
    if "/" in compact:
        raise _unsupported(text, "quotients by central subgroups are not simply connected")

    factors: list[SimpleFactor] = []
    for term in _SEPARATOR.split(compact):
        m = _TERM.match(term)
        if m is None:
            raise GroupSyntaxError(f"cannot parse {term!r} in {text!r}")
        atom_factors = _parse_atom(m["atom"])
        power = int(m["power"]) if m["power"] is not None else 1
        if power < 1:
            raise GroupSyntaxError(f"repetition exponent must be >= 1 in {term!r}")
        factors.extend(atom_factors * power)
    return GroupSpec(tuple(factors))


def render_group_spec(g: GroupSpec) -> str:
    return " x ".join(f.name for f in g.factors)


# ---------------------------------------------------------------- invariants

def exponents(g: GroupSpec) -> tuple[int, ...]:
    return g.exponents


def rank(g: GroupSpec) -> int:
    return g.rank


def dimension(g: GroupSpec) -> int:
    return g.dimension


def center_order(g: GroupSpec) -> int:
    return g.center_order


def pi4_is_trivial(g: GroupSpec) -> bool:
    return g.pi4_is_trivial


@functools.lru_cache(maxsize=1024)
def rational_homotopy(g: GroupSpec) -> GradedRanks:
    """``rk pi_j(G)``: multiplicity of the exponent ``k`` at ``j = 2k - 1``."""
    nu = Counter(g.exponents)
    return GradedRanks({2 * k - 1: m for k, m in nu.items()}, SpaceTag.G)
