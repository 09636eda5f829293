"""Littlewood-Richardson products and Cauchy exterior-power expansions."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Mapping, Sequence

from .weights import Partition, Weight, WeightError, conjugate, dominant, dual, pad, partitions_of, strip

Decomposition = dict[Weight, int]


@lru_cache(maxsize=None)
def lr_partitions(lam: Partition, mu: Partition, k: int) -> dict[Partition, int]:
    """``c^nu_{lam,mu}`` for all ``nu`` with at most ``k`` rows.

    Counts LR tableaux of shape ``nu/lam`` and content ``mu``: successive
    horizontal strips labelled 1, 2, ... whose reverse reading word is a
    lattice word.
    """
    lam, mu = strip(lam), strip(mu)
    if len(lam) > k or len(mu) > k:
        return {}
    start = pad(lam, k)
    counts: dict[Partition, int] = {}
    # rows[label][row] = number of boxes with that label in that row
    rows: list[list[int]] = []

    def place(label: int, shape: tuple[int, ...]) -> None:
        if label == len(mu):
            nu = strip(shape)
            counts[nu] = counts.get(nu, 0) + 1
            return
        for new in _horizontal_strips(shape, mu[label]):
            added = [a - b for a, b in zip(new, shape)]
            if label and not _lattice_ok(rows[label - 1], added):
                continue
            rows.append(added)
            place(label + 1, new)
            rows.pop()

    place(0, start)
    return dict(sorted(counts.items(), reverse=True))


def _horizontal_strips(shape: tuple[int, ...], m: int) -> Iterable[tuple[int, ...]]:
    """Shapes obtained by adding ``m`` boxes to ``shape``, no two in a column."""
    k = len(shape)

    def rec(r: int, left: int, acc: list[int]) -> Iterable[tuple[int, ...]]:
        if r == k:
            if left == 0:
                yield tuple(acc)
            return
        cap = left if r == 0 else min(left, shape[r - 1] - shape[r])
        for add in range(cap, -1, -1):
            acc.append(shape[r] + add)
            yield from rec(r + 1, left - add, acc)
            acc.pop()

    yield from rec(0, m, [])


def _lattice_ok(prev: Sequence[int], cur: Sequence[int]) -> bool:
    # Reading rows top to bottom, right to left: the larger label in a row is
    # read before the smaller one.
    seen_prev = seen_cur = 0
    for p, c in zip(prev, cur):
        seen_cur += c
        if seen_cur > seen_prev:
            return False
        seen_prev += p
    return True


def lr_coefficients(lam: Sequence[int], mu: Sequence[int], k: int | None = None) -> Decomposition:
    """Decomposition of ``S^lam (x) S^mu`` for GL(k), entries may be negative."""
    lam = tuple(lam)
    mu = tuple(mu)
    if k is None:
        k = len(lam)
    if len(lam) != k or len(mu) != k:
        raise WeightError(f"length mismatch: {lam}, {mu} for k={k}")
    lam, mu = dominant(lam), dominant(mu)
    if k == 0:
        return {(): 1}
    a, b = lam[-1], mu[-1]
    base = lr_partitions(strip(w - a for w in lam), strip(w - b for w in mu), k)
    return {tuple(e + a + b for e in pad(nu, k)): c for nu, c in base.items()}


def tensor_decompositions(x: Mapping[Weight, int], y: Mapping[Weight, int], k: int) -> Decomposition:
    """Bilinear extension of :func:`lr_coefficients`."""
    out: Decomposition = {}
    for lam, m in x.items():
        for mu, n in y.items():
            if not (m and n):
                continue
            for nu, c in lr_coefficients(lam, mu, k).items():
                out[nu] = out.get(nu, 0) + m * n * c
    return {w: out[w] for w in sorted(out, reverse=True) if out[w]}


def exterior_power_hom(r: int, rank_a: int, rank_b: int) -> list[tuple[Partition, Partition]]:
    """Cauchy pairs ``(alpha, alpha')`` for ``Lambda^r(A (x) B)``.

    ``alpha`` fits the ``rank_a x rank_b`` box; descending lexicographic order.
    """
    return [(a, conjugate(a)) for a in partitions_of(r, max_parts=rank_a, max_part=rank_b)]


@dataclass(frozen=True)
class SlotSpace:
    """A formal vector bundle factor, e.g. ``V_k'`` or ``(V_k/V_{k-i})^dual``.

    ``degree`` is the internal degree contributed per box of a Schur functor
    of this slot.
    """

    label: str
    rank: int
    dual: bool = False
    degree: int = 0

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("slot rank must be nonnegative")

    def weight(self, alpha: Sequence[int]) -> Weight:
        """Highest weight of ``S^alpha`` of this slot, on the underlying bundle."""
        w = pad(alpha, self.rank)
        return dual(w) if self.dual else w


@dataclass(frozen=True)
class ExteriorTerm:
    """One summand of an exterior power of a sum of ``A (x) B`` slot pairs.

    ``parts[j] = (alpha_j, alpha_j')`` means ``S^alpha_j A_j (x) S^alpha_j' B_j``.
    """

    parts: tuple[tuple[Partition, Partition], ...]
    degree: int

    @property
    def boxes(self) -> int:
        return sum(sum(a) for a, _ in self.parts)


def exterior_power_sum(r: int, pairs: Sequence[tuple[SlotSpace, SlotSpace]]) -> list[ExteriorTerm]:
    """Expand ``Lambda^r(sum_j A_j (x) B_j)`` into products of Schur slots."""
    caps = [a.rank * b.rank for a, b in pairs]
    out: list[ExteriorTerm] = []
    for split in _compositions(r, caps):
        choices = [exterior_power_hom(p, a.rank, b.rank) for p, (a, b) in zip(split, pairs)]
        degree = sum(p * (a.degree + b.degree) for p, (a, b) in zip(split, pairs))
        for combo in product(*choices):
            out.append(ExteriorTerm(tuple(combo), degree))
    return out


def _compositions(r: int, caps: Sequence[int]) -> Iterable[tuple[int, ...]]:
    if not caps:
        if r == 0:
            yield ()
        return
    for p in range(min(r, caps[0]), -1, -1):
        for rest in _compositions(r - p, caps[1:]):
            yield (p,) + rest


def decompose_wedge_gl(r: int, k: int) -> Decomposition:
    """Decomposition of ``Lambda^r gl_k`` into ``S^mu V_k``."""
    if r < 0 or r > k * k:
        raise ValueError(f"r={r} outside [0, {k * k}]")
    out: Decomposition = {}
    for alpha, alpha_c in exterior_power_hom(r, k, k):
        for mu, c in lr_coefficients(dual(pad(alpha, k)), pad(alpha_c, k), k).items():
            out[mu] = out.get(mu, 0) + c
    return {w: out[w] for w in sorted(out, reverse=True) if out[w]}
