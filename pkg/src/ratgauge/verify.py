"""Runnable consistency checks over the computed tables.

The degree-wise formulas are tied together by exact sequences (based gauge
group -> gauge group -> G, and the contractible total spaces over the
connection moduli) and by the tensor splitting of ``H*(B*)``.  Each check
below re-derives one of those relations from the tables and records the
first offending degree on failure.
"""

from __future__ import annotations

import itertools
from collections import Counter
from collections.abc import Callable, Iterable, Iterator, Sequence
from dataclasses import dataclass, field

from ratgauge.cohomology import (
    AlgebraKind,
    cohomology_B_star,
    cohomology_B_tilde,
    cohomology_BG,
    cohomology_gauge_identity,
)
from ratgauge.graded import GradedRanks
from ratgauge.homotopy import (
    BaseData,
    ranks_B_star,
    ranks_B_tilde,
    ranks_G0,
    ranks_gauge,
)
from ratgauge.liegroups import (
    Family,
    GroupSpec,
    SimpleFactor,
    parse_group_spec,
    rational_homotopy,
    simple_factors,
)

__all__ = [
    "Check",
    "CheckReport",
    "check_group_data",
    "check_sequence_consistency",
    "check_totals",
    "group_zoo",
    "simple_groups",
    "SAMPLE_FACTORS",
    "run_selftest",
]


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"


@dataclass
class CheckReport:
    checks: list[Check] = field(default_factory=list)
    _names: set[str] = field(default_factory=set, repr=False, compare=False)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        if name in self._names:
            raise ValueError(f"check {name!r} recorded twice")
        self._names.add(name)
        self.checks.append(Check(name, bool(passed), detail))

    def extend(self, other: CheckReport, prefix: str = "") -> None:
        for c in other.checks:
            self.add(prefix + c.name, c.passed, c.detail)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __iter__(self) -> Iterator[Check]:
        return iter(self.checks)

    def __len__(self) -> int:
        return len(self.checks)

    def lines(self) -> list[str]:
        return [f"[{c.status}] {c.name}" + (f": {c.detail}" if c.detail else "") for c in self.checks]


def _first_mismatch(degrees: Iterable[int], lhs: Sequence[int], rhs: Callable[[int], int]) -> str:
    for j in degrees:
        a, b = lhs[j], rhs(j)
        if a != b:
            return f"degree {j}: {a} != {b}"
    return ""


# ---------------------------------------------------------------- group data

def check_group_data(
    g: GroupSpec,
    exponent_table: Callable[[SimpleFactor], Iterable[int]] | None = None,
) -> CheckReport:
    """Exponent bookkeeping against the independent rank/dimension tables.

    ``exponent_table`` overrides the per-factor exponent lookup (used for
    fault injection).
    """
    lookup = exponent_table or (lambda f: f.exponents)
    report = CheckReport()
    per_factor = [(f, list(lookup(f))) for f in g.factors]
    all_exps = [k for _, ks in per_factor for k in ks]

    nu = Counter(all_exps)
    pi = GradedRanks({2 * k - 1: m for k, m in nu.items()})
    report.add(
        "sum of exponent multiplicities equals rank",
        sum(nu.values()) == g.rank == pi.total(),
        "" if sum(nu.values()) == g.rank else f"{sum(nu.values())} != rank {g.rank}",
    )
    bad_dim = [
        f"{f.name}: sum(2k-1) = {sum(2 * k - 1 for k in ks)} != dim {f.dimension}"
        for f, ks in per_factor
        if sum(2 * k - 1 for k in ks) != f.dimension
    ]
    report.add("sum of (2k-1) equals dimension", not bad_dim, "; ".join(bad_dim))
    bad_min = [f"{f.name}: min exponent {min(ks, default=None)}" for f, ks in per_factor if min(ks, default=0) != 2]
    report.add("minimum exponent is 2 in every factor", not bad_min, "; ".join(bad_min))
    report.add(
        "pi_3(G) rank equals number of simple factors",
        nu[2] == g.num_factors,
        "" if nu[2] == g.num_factors else f"{nu[2]} != {g.num_factors}",
    )
    return report


# ---------------------------------------------------------------- sequences

def check_sequence_consistency(g: GroupSpec, base: BaseData | int, max_degree: int) -> CheckReport:
    if max_degree < 1:
        raise ValueError("max_degree must be >= 1")
    base = base if isinstance(base, BaseData) else BaseData(base)
    b2 = base.b2
    degrees = range(1, max_degree + 1)
    top = max_degree + 4
    pi = rational_homotopy(g).dense(top)
    g0 = ranks_G0(g, base).dense(top)
    gauge = ranks_gauge(g, base).dense(top)
    bt = ranks_B_tilde(g, base).dense(top)
    bs = ranks_B_star(g, base).dense(top)
    report = CheckReport()

    # closed forms evaluated straight from rk pi_*(G), independent of how the tables are built
    identities = (
        ("G0(j) = b2 rk pi_{j+2}(G) + rk pi_{j+4}(G)", g0, lambda j: b2 * pi[j + 2] + pi[j + 4]),
        ("B~(j) = b2 rk pi_{j+1}(G) + rk pi_{j+3}(G)", bt, lambda j: b2 * pi[j + 1] + pi[j + 3]),
        ("gauge(j) = G0(j) + rk pi_j(G)", gauge, lambda j: g0[j] + pi[j]),
        ("B~(j) = G0(j-1)", bt, lambda j: g0[j - 1]),
        ("B*(j) = gauge(j-1)", bs, lambda j: gauge[j - 1]),
        ("B*(j) = B~(j) + rk pi_{j-1}(G)", bs, lambda j: bt[j] + pi[j - 1]),
    )
    for name, table, expected in identities:
        detail = _first_mismatch(degrees, table, expected)
        report.add(name, not detail, detail)

    parity_bad = [
        f"{name} nonzero at degree {j}"
        for name, table, parity in (("G0", g0, 0), ("gauge", gauge, 0), ("B~", bt, 1), ("B*", bs, 1))
        for j in degrees
        if j % 2 == parity and table[j]
    ]
    report.add("parity: gauge groups odd, B-spaces even", not parity_bad, "; ".join(parity_bad[:3]))

    a_bt, a_bs, a_bg, a_gauge = (
        cohomology_B_tilde(g, base),
        cohomology_B_star(g, base),
        cohomology_BG(g),
        cohomology_gauge_identity(g, base),
    )
    lhs = Counter(a_bs.degrees())
    rhs = Counter(a_bt.degrees()) + Counter(a_bg.degrees())
    diff = sorted(set(lhs) | set(rhs))
    report.add(
        "H*(B*) generators = H*(B~) + H*(BG) generators",
        lhs == rhs,
        "" if lhs == rhs else "degrees " + ", ".join(str(j) for j in diff if lhs[j] != rhs[j]),
    )
    kinds_ok = (a_gauge.kind is AlgebraKind.EXTERIOR or a_gauge.is_trivial) and all(
        a.kind is AlgebraKind.POLYNOMIAL for a in (a_bt, a_bs, a_bg)
    )
    report.add("algebra kinds: gauge exterior, B-spaces polynomial", kinds_ok)
    counts_bad = []
    for name, alg, table in (("gauge", a_gauge, gauge), ("B~", a_bt, bt), ("B*", a_bs, bs)):
        counts = alg.generators
        wrong = [j for j in degrees if counts.get(j, 0) != table[j]]
        if wrong:
            counts_bad.append(f"{name} degree {wrong[0]}")
    report.add("generators in degree j = rk pi_j", not counts_bad, "; ".join(counts_bad[:3]))
    return report


# ---------------------------------------------------------------- totals

def check_totals(g: GroupSpec, base: BaseData | int) -> CheckReport:
    """Summed tables against ``(b2 + c) rk G - s`` with ``s`` simple factors."""
    base = base if isinstance(base, BaseData) else BaseData(base)
    b2, rk, s = base.b2, g.rank, g.num_factors
    report = CheckReport()
    sums = {
        "G0": (ranks_G0(g, base).total(), (b2 + 1) * rk - s),
        "gauge": (ranks_gauge(g, base).total(), (b2 + 2) * rk - s),
        "B~": (ranks_B_tilde(g, base).total(), (b2 + 1) * rk - s),
        "B*": (ranks_B_star(g, base).total(), (b2 + 2) * rk - s),
    }
    form = {"G0": "(b2+1)rkG", "gauge": "(b2+2)rkG", "B~": "(b2+1)rkG", "B*": "(b2+2)rkG"}
    for name, (got, want) in sums.items():
        note = f"{got}" if got == want else f"{got} != {want}"
        if s > 1:
            note += f" (generalized form -s, s={s})"
        report.add(f"total {name} = {form[name]} - s", got == want, note)
    if s == 1:
        for name in ("gauge", "B~", "B*"):
            got, _ = sums[name]
            want = (b2 + (1 if name == "B~" else 2)) * rk - 1
            report.add(f"total {name} = {form[name]} - 1", got == want, f"{got}" if got == want else f"{got} != {want}")
    return report


# ---------------------------------------------------------------- zoo

def simple_groups(max_rank: int) -> list[GroupSpec]:
    """Every simple simply connected group of rank <= ``max_rank``, canonical, no repeats."""
    out: list[GroupSpec] = []
    seen: set[SimpleFactor] = set()
    for family in Family:
        ranks = range(2 if family is Family.D else 1, max_rank + 1) if family.is_classical else [0]
        for n in ranks:
            fs = simple_factors(family, n)
            if len(fs) != 1 or fs[0] in seen or fs[0].rank > max_rank:
                continue
            seen.add(fs[0])
            out.append(GroupSpec(tuple(fs)))
    return out


# one or two representatives per family, used to keep triple products affordable
SAMPLE_FACTORS = ("SU(2)", "SU(3)", "Sp(2)", "Spin(7)", "Spin(8)", "G2", "F4", "E6", "E7", "E8")


def group_zoo(
    max_rank: int = 8,
    max_factors: int = 3,
    max_total_rank: int = 16,
    triple_basis: Iterable[str] | None = SAMPLE_FACTORS,
) -> list[GroupSpec]:
    """Simple groups up to ``max_rank`` and products of them.

    Products are unordered (combinations with repetition), capped at
    ``max_total_rank``.  Pairs range over all simple groups; products of
    three or more factors range over ``triple_basis`` (all simple groups
    when it is ``None``).
    """
    simples = simple_groups(max_rank)
    basis = simples if triple_basis is None else [parse_group_spec(t) for t in triple_basis]
    out = list(simples)
    for k in range(2, max_factors + 1):
        pool = simples if k == 2 else basis
        for combo in itertools.combinations_with_replacement(pool, k):
            g = GroupSpec(tuple(f for h in combo for f in h.factors))
            if g.rank <= max_total_rank:
                out.append(g)
    return out


def run_selftest(
    groups: Iterable[GroupSpec] | None = None,
    b2_values: Iterable[int] = (0, 1, 2, 3, 22),
    max_degree: int = 64,
) -> CheckReport:
    report = CheckReport()
    groups = list(groups) if groups is not None else group_zoo()
    b2_values = list(b2_values)
    for g in groups:
        label = str(g)
        report.extend(check_group_data(g), f"{label}: ")
        for b2 in b2_values:
            report.extend(check_sequence_consistency(g, b2, max_degree), f"{label}, b2={b2}: ")
            report.extend(check_totals(g, b2), f"{label}, b2={b2}: ")
    return report
