"""Partitions and dominant GL(k) weights.

Both are plain tuples of ints.  A dominant weight has a fixed length ``k`` and
may contain negative entries; a partition is the nonnegative case with
trailing zeros stripped.
"""

from __future__ import annotations

from itertools import combinations_with_replacement
from typing import Iterable, Sequence

Weight = tuple[int, ...]
Partition = tuple[int, ...]


class WeightError(ValueError):
    """Malformed weight or partition, or an invalid enumeration range."""


def dominant(entries: Iterable[int], k: int | None = None) -> Weight:
    """Validate and return ``entries`` as a dominant weight of length ``k``."""
    w = tuple(int(e) for e in entries)
    if k is not None and len(w) != k:
        raise WeightError(f"weight {w} does not have length {k}")
    if any(a < b for a, b in zip(w, w[1:])):
        raise WeightError(f"weight {w} is not weakly decreasing")
    return w


def partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` as a partition, dropping trailing zeros."""
    p = dominant(parts)
    if p and p[-1] < 0:
        raise WeightError(f"partition {p} has negative parts")
    return strip(p)


def strip(p: Sequence[int]) -> Partition:
    p = tuple(p)
    n = len(p)
    while n and p[n - 1] == 0:
        n -= 1
    return p[:n]


def pad(p: Sequence[int], k: int) -> Weight:
    """Pad a partition with zeros to length ``k``."""
    if len(p) > k:
        raise WeightError(f"{tuple(p)} has more than {k} parts")
    return tuple(p) + (0,) * (k - len(p))


def size(p: Sequence[int]) -> int:
    return sum(p)


def conjugate(p: Sequence[int]) -> Partition:
    """Column lengths of the Young diagram ``p``."""
    p = strip(p)
    if not p:
        return ()
    return tuple(sum(1 for part in p if part > j) for j in range(p[0]))


def dual(w: Sequence[int]) -> Weight:
    """Highest weight of the dual representation: negate and reverse."""
    return tuple(-e for e in reversed(w))


def twist(w: Sequence[int], d: int) -> Weight:
    """Tensor with ``det**d``."""
    return tuple(e + d for e in w)


def enumerate_in_box(rows: int, cols: int) -> list[Partition]:
    """All partitions with at most ``rows`` parts, each at most ``cols``.

    Ordered lexicographically (ascending) on the zero-padded vectors, so the
    empty partition comes first.
    """
    if rows < 0 or cols < 0:
        raise WeightError("box dimensions must be nonnegative")
    return [strip(w) for w in _weakly_decreasing(rows, 0, cols + 1)]


def enumerate_dominant_in_interval(k: int, lo: int, hi: int) -> list[Weight]:
    """All dominant weights of length ``k`` with entries in ``[lo, hi)``.

    Same ascending lexicographic order as :func:`enumerate_in_box`.
    """
    if lo >= hi:
        raise WeightError(f"empty interval [{lo}, {hi})")
    return list(_weakly_decreasing(k, lo, hi))


def _weakly_decreasing(k: int, lo: int, hi: int) -> list[Weight]:
    out = [tuple(sorted(c, reverse=True)) for c in combinations_with_replacement(range(lo, hi), k)]
    out.sort()
    return out


def partitions_of(n: int, max_parts: int | None = None, max_part: int | None = None) -> list[Partition]:
    """Partitions of ``n`` with optional bounds, in descending lexicographic order."""
    out: list[Partition] = []
    if max_part is None:
        max_part = n
    if max_parts is None:
        max_parts = n

    def rec(remaining: int, cap: int, slots: int, acc: list[int]) -> None:
        if remaining == 0:
            out.append(tuple(acc))
            return
        if slots == 0:
            return
        for part in range(min(cap, remaining), 0, -1):
            acc.append(part)
            rec(remaining - part, part, slots - 1, acc)
            acc.pop()

    if n >= 0:
        rec(n, max_part, max_parts, [])
    return out
