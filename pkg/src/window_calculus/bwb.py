"""Borel-Weil-Bott on Grassmannians ``Gr(a, b)`` of ``a``-planes in ``C^b``.

A Schur bundle ``S^q Q (x) S^s S`` (tautological sub ``S`` of rank ``a``,
quotient ``Q`` of rank ``b - a``) is encoded by the concatenated weight
``(q, s)``.  Quotient weights come first.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .characters import SymLaurentPoly, decompose_into_schur, divide_by_vandermonde, schur_polynomial
from .weights import Weight, WeightError, dominant, dual


@dataclass(frozen=True)
class GrWeight:
    a: int
    b: int
    quotient: Weight
    sub: Weight

    def __post_init__(self):
        if not 0 <= self.a <= self.b:
            raise WeightError(f"need 0 <= a <= b, got a={self.a}, b={self.b}")
        object.__setattr__(self, "quotient", dominant(self.quotient, self.b - self.a))
        object.__setattr__(self, "sub", dominant(self.sub, self.a))

    @property
    def dim(self) -> int:
        return self.a * (self.b - self.a)

    def dual_twisted_by_canonical(self) -> "GrWeight":
        """``E^dual (x) omega``; ``omega = det(S)^(b-a) (x) det(Q)^(-a)``."""
        return GrWeight(
            self.a,
            self.b,
            tuple(e - self.a for e in dual(self.quotient)),
            tuple(e + self.b - self.a for e in dual(self.sub)),
        )


@dataclass(frozen=True)
class BwbResult:
    """Nonzero cohomology ``H^degree = S^weight C^b``; ``None`` fields mean zero."""

    degree: int | None = None
    weight: Weight | None = None

    @property
    def is_zero(self) -> bool:
        return self.weight is None


ZERO = BwbResult()


def bwb(w: GrWeight) -> BwbResult:
    """Cohomology of ``S^q Q (x) S^s S`` on ``Gr(a, b)`` via the dotted action."""
    b = w.b
    shifted = [e + (b - 1 - j) for j, e in enumerate(w.quotient + w.sub)]
    if len(set(shifted)) < len(shifted):
        return ZERO
    inversions = sum(1 for i, j in combinations(range(b), 2) if shifted[i] < shifted[j])
    ordered = sorted(shifted, reverse=True)
    return BwbResult(inversions, tuple(e - (b - 1 - j) for j, e in enumerate(ordered)))


def euler_characteristic(w: GrWeight) -> dict[Weight, int]:
    """Signed decomposition ``(-1)^degree [weight]`` read off :func:`bwb`."""
    res = bwb(w)
    if res.is_zero:
        return {}
    return {res.weight: -1 if res.degree % 2 else 1}


def euler_characteristic_localized(w: GrWeight) -> dict[Weight, int]:
    """Independent oracle: Atiyah-Bott localization over torus-fixed points.

    ``chi = sum_I ch(E_I) / prod_{i in I, j not in I} (1 - x_i/x_j)``, summed
    over ``a``-subsets ``I`` (the fixed coordinate planes), brought over the
    Vandermonde denominator and divided exactly.
    """
    a, b = w.a, w.b
    total = SymLaurentPoly(b)
    for sub_idx in combinations(range(b), a):
        quo_idx = tuple(j for j in range(b) if j not in sub_idx)
        fiber = _embed(schur_polynomial(w.sub, a), sub_idx, b) * _embed(
            schur_polynomial(w.quotient, b - a), quo_idx, b
        )
        # 1/prod(1 - x_i/x_j) = prod x_j^a / prod (x_j - x_i); multiply by the
        # full Vandermonde prod_{p<q}(x_p - x_q).
        shift = [0] * b
        for j in quo_idx:
            shift[j] += a
        sign = 1
        for p, q in combinations(range(b), 2):
            if p in sub_idx and q in quo_idx:
                sign = -sign
        num = fiber.shift(shift) * _partial_vandermonde(sub_idx, b) * _partial_vandermonde(quo_idx, b)
        total = total + num.scale(sign)
    return decompose_into_schur(divide_by_vandermonde(total))


def _embed(f: SymLaurentPoly, idx: Sequence[int], b: int) -> SymLaurentPoly:
    terms = {}
    for e, c in f.terms.items():
        full = [0] * b
        for pos, v in zip(idx, e):
            full[pos] = v
        terms[tuple(full)] = c
    return SymLaurentPoly(b, terms)


def _partial_vandermonde(idx: Sequence[int], b: int) -> SymLaurentPoly:
    out = SymLaurentPoly.one(b)
    for p, q in combinations(idx, 2):
        ep = [0] * b
        ep[p] = 1
        eq = [0] * b
        eq[q] = 1
        out = out * SymLaurentPoly(b, {tuple(ep): 1, tuple(eq): -1})
    return out
