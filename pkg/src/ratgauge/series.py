"""Exact Poincaré series of free graded-commutative algebras.

The Poincaré series of a free algebra factors as

    prod_{odd d} (1 + t^d)  /  prod_{even e} (1 - t^e)

and is expanded by multiplying the factors one at a time, truncating at the
requested degree.  Everything is Python ``int``; coefficients for ``E8`` at
high degree get large and must stay exact.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from ratgauge.cohomology import FreeGradedAlgebra

__all__ = ["RationalSeries", "poincare_series", "expand", "betti"]


def _times_binomial(coeffs: list[int], degree: int, sign: int) -> None:
    """In place: ``coeffs *= (1 + sign * t^degree)``."""
    coeffs.extend([0] * degree)
    for i in range(len(coeffs) - 1, degree - 1, -1):
        coeffs[i] += sign * coeffs[i - degree]


@dataclass(frozen=True)
class RationalSeries:
    """``numerator / denominator`` in ``Z[t]`` with ``denominator(0) = 1``.

    Series coming from :func:`poincare_series` also remember their factored
    form, ``(1 + t^d)`` factors on top and ``(1 - t^e)`` factors below, keyed
    by degree with multiplicity; :func:`expand` uses it when present.
    """

    numerator: tuple[int, ...]
    denominator: tuple[int, ...]
    numerator_factors: tuple[tuple[int, int], ...] | None = None
    denominator_factors: tuple[tuple[int, int], ...] | None = None

    def __post_init__(self):
        num = tuple(int(c) for c in self.numerator) or (0,)
        den = tuple(int(c) for c in self.denominator)
        if not den or den[0] != 1:
            raise ValueError("denominator must have constant term 1")
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

    @classmethod
    def from_factors(cls, odd: dict[int, int], even: dict[int, int]) -> RationalSeries:
        num, den = [1], [1]
        for d, m in sorted(odd.items()):
            for _ in range(m):
                _times_binomial(num, d, 1)
        for e, m in sorted(even.items()):
            for _ in range(m):
                _times_binomial(den, e, -1)
        return cls(tuple(num), tuple(den), tuple(sorted(odd.items())), tuple(sorted(even.items())))

    def __str__(self) -> str:
        if self.numerator_factors is None or self.denominator_factors is None:
            return f"({_poly_str(self.numerator)})/({_poly_str(self.denominator)})"
        top = "".join(_factor_str(d, m, "+") for d, m in self.numerator_factors) or "1"
        bottom = "".join(_factor_str(e, m, "-") for e, m in self.denominator_factors) or "1"
        return f"{top}/{bottom}"

    def numerator_at_one(self) -> int:
        return sum(self.numerator)


def _factor_str(d: int, m: int, sign: str) -> str:
    base = f"(1{sign}t^{d})"
    return base if m == 1 else f"{base}^{m}"


def _poly_str(coeffs: Sequence[int]) -> str:
    terms = [f"{c}*t^{i}" if i else str(c) for i, c in enumerate(coeffs) if c]
    return " + ".join(terms) or "0"


def poincare_series(a: FreeGradedAlgebra) -> RationalSeries:
    odd = {d: c for d, c in a.generators.items() if d % 2}
    even = {d: c for d, c in a.generators.items() if d % 2 == 0}
    return RationalSeries.from_factors(odd, even)


def expand(s: RationalSeries, n: int) -> list[int]:
    """Coefficients of ``t^0 .. t^n`` of the power series of ``s``."""
    if n < 0:
        raise ValueError(f"expansion degree must be >= 0, got {n}")
    if s.numerator_factors is not None and s.denominator_factors is not None:
        return _expand_factored(s.numerator_factors, s.denominator_factors, n)
    return _expand_quotient(s.numerator, s.denominator, n)


def _expand_factored(odd, even, n: int) -> list[int]:
    out = [1] + [0] * n
    for d, m in odd:
        for _ in range(m):
            # multiply by (1 + t^d): walk downwards so each term is used once
            for i in range(n, d - 1, -1):
                out[i] += out[i - d]
    for e, m in even:
        for _ in range(m):
            # divide by (1 - t^e): multiply by 1 + t^e + t^2e + ...
            for i in range(e, n + 1):
                out[i] += out[i - e]
    return out


def _expand_quotient(num: Sequence[int], den: Sequence[int], n: int) -> list[int]:
    out = [0] * (n + 1)
    for i in range(n + 1):
        acc = num[i] if i < len(num) else 0
        for k in range(1, min(i, len(den) - 1) + 1):
            acc -= den[k] * out[i - k]
        out[i] = acc
    return out


def betti(a: FreeGradedAlgebra, j: int) -> int:
    """``dim H^j`` of the free algebra ``a``."""
    if j < 0:
        raise ValueError(f"degree must be >= 0, got {j}")
    return expand(poincare_series(a), j)[j]

