"""Character ring of GL(k): symmetric Laurent polynomials and Schur expansion.

This module is the brute-force oracle for every decomposition claim elsewhere
in the package, so it deliberately shares no code with the tableau-based
Littlewood-Richardson rule in :mod:`window_calculus.tensorcalc`.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Mapping, Sequence

from .weights import Weight, WeightError, dominant

Exponent = tuple[int, ...]
Decomposition = dict[Weight, int]


class SymmetryError(ValueError):
    """A Laurent polynomial expected to be symmetric is not."""


class SymLaurentPoly:
    """Laurent polynomial in ``k`` variables with integer coefficients.

    Symmetry is not enforced on construction (intermediate products in the
    oracle are not symmetric); :meth:`is_symmetric` checks it.
    """

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms: Mapping[Exponent, int] | None = None):
        self.k = k
        self.terms: dict[Exponent, int] = {}
        for e, c in (terms or {}).items():
            if len(e) != k:
                raise ValueError(f"exponent {e} has wrong length for k={k}")
            if c:
                self.terms[tuple(e)] = int(c)

    @classmethod
    def one(cls, k: int) -> "SymLaurentPoly":
        return cls(k, {(0,) * k: 1})

    @classmethod
    def monomial(cls, exponent: Sequence[int], coeff: int = 1) -> "SymLaurentPoly":
        return cls(len(exponent), {tuple(exponent): coeff})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymLaurentPoly):
            return NotImplemented
        return self.k == other.k and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "SymLaurentPoly") -> "SymLaurentPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return SymLaurentPoly(self.k, out)

    def __neg__(self) -> "SymLaurentPoly":
        return SymLaurentPoly(self.k, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "SymLaurentPoly") -> "SymLaurentPoly":
        return self + (-other)

    def scale(self, c: int) -> "SymLaurentPoly":
        return SymLaurentPoly(self.k, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other: "SymLaurentPoly") -> "SymLaurentPoly":
        if self.k != other.k:
            raise ValueError("rank mismatch")
        out: dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return SymLaurentPoly(self.k, out)

    def shift(self, exponent: Sequence[int]) -> "SymLaurentPoly":
        """Multiply by the monomial ``x**exponent``."""
        return SymLaurentPoly(
            self.k, {tuple(a + b for a, b in zip(e, exponent)): c for e, c in self.terms.items()}
        )

    def is_symmetric(self) -> bool:
        for e, c in self.terms.items():
            for i in range(self.k - 1):
                swapped = e[:i] + (e[i + 1], e[i]) + e[i + 2:]
                if self.terms.get(swapped, 0) != c:
                    return False
        return True

    def evaluate_at_ones(self) -> int:
        return sum(self.terms.values())

    def divide_by_difference(self, i: int, j: int) -> "SymLaurentPoly":
        """Exact quotient by ``x_i - x_j``; raises if it does not divide."""
        rem = dict(self.terms)
        quo: dict[Exponent, int] = {}
        if not rem:
            return SymLaurentPoly(self.k)
        top = max(e[i] for e in rem)
        bottom = min(e[i] for e in rem)
        for d in range(top, bottom, -1):
            for e in [e for e in rem if e[i] == d]:
                c = rem.pop(e)
                if not c:
                    continue
                qe = e[:i] + (d - 1,) + e[i + 1:]
                quo[qe] = quo.get(qe, 0) + c
                # subtract c*x^qe*(x_i - x_j); the x_i part cancels e exactly
                ne = list(qe)
                ne[j] += 1
                ne = tuple(ne)
                rem[ne] = rem.get(ne, 0) + c
        if any(rem.values()):
            raise ArithmeticError(f"x_{i} - x_{j} does not divide the polynomial")
        return SymLaurentPoly(self.k, quo)

    def __repr__(self) -> str:
        items = sorted(self.terms.items(), reverse=True)
        return f"SymLaurentPoly(k={self.k}, {dict(items)})"


def alternant(exponent: Sequence[int]) -> SymLaurentPoly:
    """``sum_w sign(w) x**w(exponent)`` over all permutations."""
    k = len(exponent)
    terms: dict[Exponent, int] = {}
    for perm in permutations(range(k)):
        e = tuple(exponent[perm[j]] for j in range(k))
        terms[e] = terms.get(e, 0) + _sign(perm)
    return SymLaurentPoly(k, terms)


def _sign(perm: Sequence[int]) -> int:
    inv = sum(1 for a, b in combinations(range(len(perm)), 2) if perm[a] > perm[b])
    return -1 if inv % 2 else 1


def divide_by_vandermonde(f: SymLaurentPoly) -> SymLaurentPoly:
    """Exact quotient by ``prod_{i<j} (x_i - x_j)``."""
    for i, j in combinations(range(f.k), 2):
        f = f.divide_by_difference(i, j)
    return f


@lru_cache(maxsize=None)
def _schur_nonneg(lam: Weight) -> SymLaurentPoly:
    k = len(lam)
    rho = tuple(range(k - 1, -1, -1))
    return divide_by_vandermonde(alternant(tuple(a + b for a, b in zip(lam, rho))))


def schur_polynomial(lam: Sequence[int], k: int | None = None) -> SymLaurentPoly:
    """Weyl character of ``S^lam`` as a bialternant ratio.

    Negative entries are handled by a determinant twist before dividing.
    """
    lam = dominant(lam, k)
    if not lam:
        return SymLaurentPoly.one(0)
    m = min(lam[-1], 0)
    base = _schur_nonneg(tuple(e - m for e in lam))
    return base.shift((m,) * len(lam)) if m else SymLaurentPoly(base.k, base.terms)


def decompose_into_schur(f: SymLaurentPoly, k: int | None = None) -> Decomposition:
    """Expand a symmetric Laurent polynomial as ``sum m_lam s_lam``.

    Repeatedly peels off the lexicographically leading Schur term, so virtual
    characters come back with negative coefficients.
    """
    if k is not None and f.k != k:
        raise ValueError(f"polynomial has {f.k} variables, expected {k}")
    if not f.is_symmetric():
        raise SymmetryError("input is not a symmetric Laurent polynomial")
    out: Decomposition = {}
    rem = SymLaurentPoly(f.k, f.terms)
    while rem:
        lead = max(rem.terms)
        c = rem.terms[lead]
        out[lead] = out.get(lead, 0) + c
        rem = rem - schur_polynomial(lead).scale(c)
    return {w: out[w] for w in sorted(out, reverse=True) if out[w]}


def character(decomp: Mapping[Sequence[int], int], k: int) -> SymLaurentPoly:
    """``sum m_lam s_lam`` as a Laurent polynomial."""
    total = SymLaurentPoly(k)
    for lam, m in decomp.items():
        if m:
            total = total + schur_polynomial(lam, k).scale(m)
    return total


def weight_multiset(lam: Sequence[int], k: int | None = None) -> Counter:
    """Torus weights of ``S^lam V_k`` with multiplicity."""
    return Counter(schur_polynomial(lam, k).terms)


def weyl_dimension(lam: Sequence[int]) -> int:
    lam = dominant(lam)
    k = len(lam)
    num = Fraction(1)
    for i, j in combinations(range(k), 2):
        num *= Fraction(lam[i] - lam[j] + j - i, j - i)
    if num.denominator != 1:
        raise WeightError("non-integral Weyl dimension")
    return int(num)


def exterior_power_character(weights: Iterable[Sequence[int]], r: int, k: int) -> SymLaurentPoly:
    """Character of ``Lambda^r`` of the representation with the given torus weights."""
    weights = list(weights)
    terms: dict[Exponent, int] = {}
    for chosen in combinations(range(len(weights)), r):
        e = [0] * k
        for idx in chosen:
            for a, v in enumerate(weights[idx]):
                e[a] += v
        e = tuple(e)
        terms[e] = terms.get(e, 0) + 1
    return SymLaurentPoly(k, terms)


def adjoint_weights(k: int) -> list[Exponent]:
    """Torus weights ``e_i - e_j`` of ``gl_k = V^dual (x) V``."""
    out = []
    for i in range(k):
        for j in range(k):
            e = [0] * k
            e[i] += 1
            e[j] -= 1
            out.append(tuple(e))
    return out
