"""Window intervals, magic-window generators and kernel bookkeeping."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .weights import Weight, dominant, enumerate_dominant_in_interval, twist


class GenericityError(ValueError):
    """The window parameter puts a window boundary on the weight lattice."""


@dataclass(frozen=True)
class WindowSpec:
    """Half-open integer interval ``[lo, hi)`` of width ``N``."""

    N: int
    lo: int
    hi: int
    delta: Fraction | None = None
    k: int | None = None

    def __post_init__(self):
        if self.hi - self.lo != self.N:
            raise ValueError(f"[{self.lo}, {self.hi}) does not have width {self.N}")
        if self.delta is not None:
            lo, hi = _ceil_bounds(self.N, self.delta)
            if (lo, hi) != (self.lo, self.hi):
                raise ValueError(f"bounds do not match delta={self.delta}")

    def __contains__(self, entry: int) -> bool:
        return self.lo <= entry < self.hi


def _ceil_bounds(N: int, delta: Fraction) -> tuple[int, int]:
    half = Fraction(N, 2)
    return math.ceil(delta - half), math.ceil(delta + half)


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Accept ``'p/q'``, integers, and decimal strings exactly."""
    return Fraction(text)


def window_interval(N: int, delta: Fraction | str | int, k: int | None = None) -> WindowSpec:
    """The window ``[ceil(delta - N/2), ceil(delta + N/2))``."""
    delta = parse_rational(delta)
    half = Fraction(N, 2)
    if (delta - half).denominator == 1 or (delta + half).denominator == 1:
        raise GenericityError(f"delta={delta} is not generic for N={N}")
    lo, hi = _ceil_bounds(N, delta)
    return WindowSpec(N, lo, hi, delta, k)


def fixed_window(k: int, N: int) -> WindowSpec:
    """The window ``[-k, N-k)`` used for the flop of ``T*Gr(k, N)``.

    ``delta = N/2 - k - 1/2`` realises it.
    """
    return window_interval(N, Fraction(N, 2) - k - Fraction(1, 2), k)


def twisted_window(k: int, N: int) -> WindowSpec:
    """``[0, N)``: :func:`fixed_window` after the common twist ``det(V_k')**k``."""
    return shift_window_by_det(fixed_window(k, N), k)


def in_window(lam: Sequence[int], w: WindowSpec) -> bool:
    if w.k is not None:
        dominant(lam, w.k)
    return all(w.lo <= e < w.hi for e in lam)


def magic_generators(k: int, w: WindowSpec) -> list[Weight]:
    """Highest weights of the bundles split-generating the window subcategory."""
    return enumerate_dominant_in_interval(k, w.lo, w.hi)


def shift_window_by_det(w: WindowSpec, d: int) -> WindowSpec:
    delta = None if w.delta is None else w.delta + d
    return WindowSpec(w.N, w.lo + d, w.hi + d, delta, w.k)


def shift_generators(gens: Sequence[Sequence[int]], d: int) -> list[Weight]:
    """Tensor every generator with ``det**d``."""
    return [twist(g, d) for g in gens]


@dataclass(frozen=True)
class KernelDescriptor:
    """Determinant twists of an integral kernel and its internal degree shift."""

    kind: str
    det_exponents: dict[str, int] = field(hash=False)
    internal_shift: int


def kernel_descriptor(kind: str, m: int, n: int, N: int) -> KernelDescriptor:
    """Line-bundle twists for the E, F and transported F kernels.

    For ``kind='Fprime'`` pass ``m = k - i`` and ``n = k``; the slot ``V_k'``
    replaces ``V_n``.
    """
    if not 0 <= m <= n <= N:
        raise ValueError(f"need 0 <= m <= n <= N, got m={m}, n={n}, N={N}")
    if kind == "E":
        return KernelDescriptor("E", {"V_m": -m, "V_n": n, "C^N": m - n}, m * n - n * n)
    if kind == "F":
        return KernelDescriptor("F", {"V_m": m - N, "V_n": N - n}, m * n - m * m)
    if kind == "Fprime":
        i, k = n - m, n
        return KernelDescriptor("Fprime", {"V_m": k - i, "V_k'": -k, "C^N": i}, i * k - i * i)
    raise ValueError(f"unknown kernel kind {kind!r}")


def adjunction_shift(m: int, n: int, N: int) -> int:
    """Shift ``(n-m)(N-n-m)`` relating the left and right adjoints of E."""
    if not 0 <= m <= n <= N:
        raise ValueError(f"need 0 <= m <= n <= N, got m={m}, n={n}, N={N}")
    return (n - m) * (N - n - m)
