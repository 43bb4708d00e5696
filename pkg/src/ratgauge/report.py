"""Result bundles and their text / JSON / LaTeX renderings."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import asdict, dataclass, field

from ratgauge.cohomology import AlgebraKind, FreeGradedAlgebra, cohomology_for
from ratgauge.graded import SpaceTag
from ratgauge.homotopy import BaseData, connectivity_report, ranks_for
from ratgauge.liegroups import GroupSpec
from ratgauge.series import expand, poincare_series

__all__ = [
    "FactorInfo",
    "GroupInfo",
    "AlgebraInfo",
    "Report",
    "build_report",
    "default_max_degree",
    "render_report",
    "FORMATS",
]

FORMATS = ("text", "json", "latex")

_SPACE_TEXT = {
    SpaceTag.G: "G",
    SpaceTag.G0: "G0 (based gauge group)",
    SpaceTag.GAUGE: "Gauge (gauge group, identity component)",
    SpaceTag.GAUGE_TILDE: "Gauge~ (extended gauge group, identity component)",
    SpaceTag.B_TILDE: "B~ = A/G0",
    SpaceTag.B_TILDE_STAR: "B~* = A*/G0",
    SpaceTag.B_STAR: "B* = A*/Gauge~",
    SpaceTag.BG: "BG (classifying space)",
}

_SPACE_LATEX = {
    SpaceTag.G: "G",
    SpaceTag.G0: r"\mathcal{G}_0^{e}",
    SpaceTag.GAUGE: r"\mathcal{G}^{e}",
    SpaceTag.GAUGE_TILDE: r"\tilde{\mathcal{G}}^{e}",
    SpaceTag.B_TILDE: r"\tilde{\mathcal{B}}",
    SpaceTag.B_TILDE_STAR: r"\tilde{\mathcal{B}}^{*}",
    SpaceTag.B_STAR: r"\mathcal{B}^{*}",
    SpaceTag.BG: r"B_{G}",
}

# spaces whose pi_0 is governed by pi_4(G)
_GAUGE_TYPE = (SpaceTag.G0, SpaceTag.GAUGE, SpaceTag.GAUGE_TILDE)


@dataclass(frozen=True)
class FactorInfo:
    name: str
    display_name: str
    cartan: str
    rank: int
    dimension: int
    exponents: list[int]
    center_order: int
    pi4_trivial: bool


@dataclass(frozen=True)
class GroupInfo:
    canonical: str
    rank: int
    dimension: int
    center_order: int
    exponents: list[int]
    factors: list[FactorInfo]

    @classmethod
    def from_group(cls, g: GroupSpec) -> GroupInfo:
        return cls(
            canonical=str(g),
            rank=g.rank,
            dimension=g.dimension,
            center_order=g.center_order,
            exponents=list(g.exponents),
            factors=[
                FactorInfo(
                    name=f.name,
                    display_name=f.display_name,
                    cartan=f.cartan_label,
                    rank=f.rank,
                    dimension=f.dimension,
                    exponents=list(f.exponents),
                    center_order=f.center_order,
                    pi4_trivial=f.pi4_is_trivial,
                )
                for f in g.factors
            ],
        )

    @property
    def num_factors(self) -> int:
        return len(self.factors)


@dataclass(frozen=True)
class AlgebraInfo:
    kind: str
    generators: list[tuple[int, int]]
    total: int


@dataclass(frozen=True)
class Report:
    group: GroupInfo
    b2: int
    space: str
    homotopy_ranks: list[tuple[int, int]]
    algebra: AlgebraInfo
    connectivity: str
    poincare: list[int] | None = None
    caveats: list[str] = field(default_factory=list)

    @property
    def tag(self) -> SpaceTag:
        return SpaceTag(self.space)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["homotopy_ranks"] = [list(p) for p in self.homotopy_ranks]
        d["algebra"]["generators"] = [list(p) for p in self.algebra.generators]
        return d

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, ensure_ascii=False)

    @classmethod
    def from_dict(cls, d: dict) -> Report:
        g = d["group"]
        group = GroupInfo(
            canonical=g["canonical"],
            rank=g["rank"],
            dimension=g["dimension"],
            center_order=g["center_order"],
            exponents=list(g["exponents"]),
            factors=[FactorInfo(**{**f, "exponents": list(f["exponents"])}) for f in g["factors"]],
        )
        a = d["algebra"]
        return cls(
            group=group,
            b2=d["b2"],
            space=d["space"],
            homotopy_ranks=[(int(j), int(r)) for j, r in d["homotopy_ranks"]],
            algebra=AlgebraInfo(a["kind"], [(int(j), int(c)) for j, c in a["generators"]], a["total"]),
            connectivity=d["connectivity"],
            poincare=None if d.get("poincare") is None else [int(c) for c in d["poincare"]],
            caveats=list(d.get("caveats", [])),
        )

    @classmethod
    def from_json(cls, text: str) -> Report:
        return cls.from_dict(json.loads(text))


def default_max_degree(g: GroupSpec) -> int:
    return 2 * g.max_exponent + 2


def _caveats(g: GroupSpec) -> list[str]:
    out = []
    s = g.num_factors
    if s > 1:
        out.append(
            f"G has {s} simple factors: generator totals are (b2+1)·rk G − {s} for B~ and "
            f"(b2+2)·rk G − {s} for Gauge and B*; the '− 1' closed forms hold for simple G only"
        )
    if not g.pi4_is_trivial:
        out.append(
            "π₄(G) ≠ 0: π₀ of the gauge groups is finite but its order is not determined; "
            "H*(Gauge) is |π₀| copies of the identity-component algebra"
        )
    return out


def build_report(
    g: GroupSpec,
    base: BaseData | int,
    space: SpaceTag | str,
    series: int | None = None,
    max_degree: int | None = None,
) -> Report:
    """Compute everything about one space.

    ``max_degree`` bounds the degrees listed; the default covers the whole
    support, so the listed algebra is complete.
    """
    base = base if isinstance(base, BaseData) else BaseData(base)
    tag = SpaceTag(space) if isinstance(space, str) else space
    top = default_max_degree(g) if max_degree is None else max_degree
    ranks = ranks_for(tag, g, base)
    algebra = cohomology_for(tag, g, base)
    gens = [(d, c) for d, c in algebra.pairs() if d <= top]
    return Report(
        group=GroupInfo.from_group(g),
        b2=base.b2,
        space=tag.value,
        homotopy_ranks=[(d, r) for d, r in ranks.pairs() if d <= top],
        algebra=AlgebraInfo(algebra.kind.value, gens, sum(c for _, c in gens)),
        connectivity=connectivity_report(g).value,
        poincare=None if series is None else expand(poincare_series(algebra), series),
        caveats=_caveats(g),
    )


# ---------------------------------------------------------------- rendering

def render_report(r: Report, fmt: str = "text") -> str:
    if fmt == "json":
        return r.to_json()
    if fmt == "latex":
        return _render_latex(r)
    if fmt == "text":
        return _render_text(r)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def _alias_note(tag: SpaceTag) -> str:
    if tag.canonical is tag:
        return ""
    return f"(rationally identical to {tag.canonical.value})"


def _render_text(r: Report) -> str:
    tag = r.tag
    g = r.group
    lines = [
        f"group         {g.canonical}   [{' x '.join(f.cartan for f in g.factors)}]",
        f"              rank {g.rank}, dim {g.dimension}, |Z(G)| {g.center_order}, "
        f"exponents {{{', '.join(map(str, g.exponents))}}}",
        f"b2            {r.b2}",
        f"space         {tag.value}: {_SPACE_TEXT[tag]} {_alias_note(tag)}".rstrip(),
        f"connectivity  {r.connectivity}",
        "",
        "rational homotopy",
    ]
    if r.homotopy_ranks:
        lines.append(f"  {'j':>4}  {'rk pi_j':>8}")
        lines += [f"  {j:>4}  {rk:>8}" for j, rk in r.homotopy_ranks]
        lines.append(f"  total {sum(rk for _, rk in r.homotopy_ranks)}")
    else:
        lines.append("  all rational homotopy groups vanish")
    lines.append("")
    if not r.algebra.generators:
        lines.append("H* = Q (trivial)")
    else:
        lines.append(f"H* {r.algebra.kind}, {r.algebra.total} generators")
        lines.append(f"  {'degree':>6}  {'count':>6}")
        lines += [f"  {d:>6}  {c:>6}" for d, c in r.algebra.generators]
    if tag in _GAUGE_TYPE:
        copies = "1 copy" if r.connectivity == "connected" else "|π₀| copies"
        lines.append(f"  full group: H* is {copies} of the identity-component algebra")
    lines.append("  minimal model: the algebra itself, d = 0 (formal)")
    if r.poincare is not None:
        lines += ["", f"Betti numbers b_0..b_{len(r.poincare) - 1}:", "  " + " ".join(map(str, r.poincare))]
    if r.caveats:
        lines += ["", "caveats:"] + [f"  - {c}" for c in r.caveats]
    return "\n".join(lines)


def _run(letter: str, sub: str, c: int, top: str | None) -> str:
    """``letter_{sub1}, ..., letter_{subc}``, elided when long or symbolic."""
    def one(i: int | str) -> str:
        return f"{letter}_{i}" if not sub and len(str(i)) == 1 else f"{letter}_{{{sub}{i}}}"

    if top is not None or c > 3:
        return rf"{one(1)},\ldots ,{one(top or c)}"
    return ",".join(one(i) for i in range(1, c + 1))


def _symbol_block(letter: str, by_degree: dict[int, int], symbolic: dict[int, str]) -> tuple[str, str] | None:
    """Generator symbols and degree annotation for one letter."""
    if not by_degree:
        return None
    if len(by_degree) == 1:
        (d, c), = by_degree.items()
        if c == 1 and d not in symbolic:
            return letter, rf"\deg {letter} = {d}"
        return _run(letter, "", c, symbolic.get(d)), rf"\deg {letter}_i = {d}"
    runs = [
        f"{letter}_{{{d}}}" if c == 1 and d not in symbolic else _run(letter, f"{d},", c, symbolic.get(d))
        for d, c in by_degree.items()
    ]
    sub = "j" if all(c == 1 and d not in symbolic for d, c in by_degree.items()) else "j,i"
    return ", ".join(runs), rf"\deg {letter}_{{{sub}}} = j"


def _latex_letters(r: Report) -> list[tuple[str, dict[int, int]]]:
    tag = r.tag.canonical
    gens = dict(r.algebra.generators)
    if tag in (SpaceTag.G, SpaceTag.G0, SpaceTag.GAUGE):
        z = {d: c for d, c in gens.items() if d == 1}
        w = {d: c for d, c in gens.items() if d != 1}
        return [("z", z), ("w", w)]
    if tag is SpaceTag.BG:
        return [("y", gens)]
    if tag is SpaceTag.B_TILDE:
        return [("x", gens)]
    # B*: split off the classifying-space generators, one in degree 2k per exponent
    y = Counter(2 * k for k in r.group.exponents)
    x = {d: c - y.get(d, 0) for d, c in gens.items() if c - y.get(d, 0) > 0}
    return [("x", x), ("y", {d: c for d, c in sorted(y.items()) if d in gens})]


def _render_latex(r: Report) -> str:
    tag = r.tag
    lhs = rf"H^{{*}}({_SPACE_LATEX[tag]};\mathbb{{Q}})"
    if not r.algebra.generators:
        return f"{lhs} = \\mathbb{{Q}}"
    # the b2 block sits in degree 1 (odd spaces) or 2 (even spaces); write it as b_2 for simple G
    symbolic: dict[int, str] = {}
    if r.group.num_factors == 1 and r.b2 >= 1 and tag not in (SpaceTag.G, SpaceTag.BG):
        symbolic[1 if tag.parity else 2] = "b_2"
    symbols, degrees = [], []
    for letter, by_degree in _latex_letters(r):
        block = _symbol_block(letter, dict(sorted(by_degree.items())), symbolic)
        if block is not None:
            symbols.append(block[0])
            degrees.append(block[1])
    body = ", ".join(symbols)
    kind = AlgebraKind(r.algebra.kind)
    algebra = rf"\wedge ({body})" if kind is AlgebraKind.EXTERIOR else rf"\mathbb{{Q}}[{body}]"
    out = rf"{lhs} = {algebra}, \quad " + r", \; ".join(degrees)
    if symbolic:
        out += rf" \qquad (b_2 = {r.b2})"
    return out


def algebra_of(r: Report) -> FreeGradedAlgebra:
    return FreeGradedAlgebra(dict(r.algebra.generators))
