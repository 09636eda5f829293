"""Grade restriction windows for the one-parameter subgroups ``gamma_i``.

``gamma_i(t) = diag(1, ..., 1, t, ..., t)`` acts on ``V_k'`` with ``k - i``
ones, so the ``gamma_i``-weight of a torus weight ``nu`` is the sum of its
last ``i`` coordinates.  ``V_k^dual`` is untouched by ``gamma_i``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .weights import dominant


@dataclass(frozen=True)
class GammaSpec:
    k: int
    i: int

    def __post_init__(self):
        if not 1 <= self.i <= self.k:
            raise ValueError(f"need 1 <= i <= k, got i={self.i}, k={self.k}")


@dataclass(frozen=True)
class WeightRange:
    min: int
    max: int

    def __post_init__(self):
        if self.min > self.max:
            raise ValueError("empty weight range")

    def union(self, other: "WeightRange") -> "WeightRange":
        return WeightRange(min(self.min, other.min), max(self.max, other.max))


def gamma_weight(g: GammaSpec, nu: Sequence[int]) -> int:
    return sum(nu[g.k - g.i:])


def gamma_weight_range(g: GammaSpec, mu: Sequence[int], lam: Sequence[int]) -> WeightRange:
    """Range of ``gamma_i``-weights on ``S^mu V^dual (x) S^lam V'``.

    Extreme weights of ``S^lam`` are permutations of ``lam``, so the range
    runs from the sum of the ``i`` smallest entries to the ``i`` largest.
    """
    dominant(mu, g.k)
    lam = dominant(lam, g.k)
    return WeightRange(sum(lam[g.k - g.i:]), sum(lam[: g.i]))


def eta(g: GammaSpec) -> int:
    return g.i * g.k


@dataclass
class GradeRestrictionReport:
    k: int
    kappa: tuple[int, ...]
    ranges: dict[int, WeightRange | None] = field(default_factory=dict)
    half_open: dict[int, bool] = field(default_factory=dict)
    closed: dict[int, bool] = field(default_factory=dict)
    offenders: dict[int, list] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.half_open.values())

    @property
    def passed_closed(self) -> bool:
        return all(self.closed.values())

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "kappa": list(self.kappa),
            "per_i": [
                {
                    "i": i,
                    "window": [self.kappa[i - 1], self.kappa[i - 1] + i * self.k],
                    "range": None if r is None else [r.min, r.max],
                    "half_open": self.half_open[i],
                    "closed": self.closed[i],
                    "offenders": self.offenders[i],
                }
                for i, r in sorted(self.ranges.items())
            ],
            "pass": self.passed,
            "pass_closed": self.passed_closed,
        }


def grade_restriction_check(
    terms: Iterable[tuple[Sequence[int], Sequence[int], int]],
    k: int,
    kappa: Sequence[int] | None = None,
) -> GradeRestrictionReport:
    """Check ``wt_gamma_i in [kappa_i, kappa_i + ik)`` for every ``i``.

    ``terms`` holds ``(mu, lam, multiplicity)`` for ``S^mu V^dual (x) S^lam V'``.
    The closed variant ``[kappa_i, kappa_i + ik]`` is reported alongside.
    """
    kappa = tuple(kappa) if kappa is not None else (0,) * k
    if len(kappa) != k:
        raise ValueError(f"kappa must have length {k}")
    terms = [(tuple(mu), tuple(lam), m) for mu, lam, m in terms if m]
    report = GradeRestrictionReport(k, kappa)
    for i in range(1, k + 1):
        g = GammaSpec(k, i)
        lo, hi = kappa[i - 1], kappa[i - 1] + eta(g)
        total = None
        bad = []
        for mu, lam, _ in terms:
            r = gamma_weight_range(g, mu, lam)
            total = r if total is None else total.union(r)
            if r.min < lo or r.max >= hi:
                bad.append({"mu": list(mu), "lambda": list(lam), "range": [r.min, r.max]})
        report.ranges[i] = total
        report.half_open[i] = total is None or (lo <= total.min and total.max < hi)
        report.closed[i] = total is None or (lo <= total.min and total.max <= hi)
        report.offenders[i] = bad
    return report
