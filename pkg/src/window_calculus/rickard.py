"""Graded bookkeeping for the Rickard complex of the flop.

The complex has terms ``p_* O_{I_{k-i}} <-i^2 - i>`` for ``i = k, ..., 0``.
Restricted to a Kempf-Ness stratum, the term for ``l < i`` splits into
copies of the ``i``-th term indexed by Schubert cells of ``Gr(i - l, i)``;
:func:`cancellation_matching` pairs those copies off in equal degrees.
"""

from __future__ import annotations

from dataclasses import dataclass

from .qpoly import QPolynomial, gaussian_binomial
from .weights import Partition, enumerate_in_box, pad, strip


class MatchingError(RuntimeError):
    """The copy pairing failed to be a perfect degree-preserving involution."""


def betti(i: int, l: int, r: int) -> int:
    """``dim H^{2r}(Gr(i - l, i))``: partitions of ``r`` in an ``(i-l) x l`` box."""
    if not 0 <= l <= i:
        raise ValueError(f"need 0 <= l <= i, got l={l}, i={i}")
    return sum(1 for p in enumerate_in_box(i - l, l) if sum(p) == r)


def poincare_centered(m: int, n: int) -> QPolynomial:
    """Poincare polynomial of ``Gr(m, n)`` in cohomological degree, centred at 0."""
    if not 0 <= m <= n:
        raise ValueError(f"need 0 <= m <= n, got m={m}, n={n}")
    return gaussian_binomial(n, m).substitute_power(2).shift(-m * (n - m))


def sl2_composition(kind: str, l: int, m: int, n: int) -> QPolynomial:
    """Multiplicity space of ``E E`` or ``F F`` compositions as a graded space."""
    if not 0 <= l <= m <= n:
        raise ValueError(f"need 0 <= l <= m <= n, got l={l}, m={m}, n={n}")
    if kind == "E":
        return poincare_centered(n - m, n - l)
    if kind == "F":
        return poincare_centered(m - l, n - l)
    raise ValueError(f"unknown kind {kind!r}")


@dataclass(frozen=True)
class RickardTerm:
    i: int
    internal_shift: int
    support: str

    @property
    def kernel(self) -> str:
        return f"p_*O_I{{k-{self.i}}}"


def term_catalog(k: int) -> list[RickardTerm]:
    """Terms from the leftmost (``i = k``) to the rightmost (``i = 0``)."""
    return [RickardTerm(i, -i * i - i, f"C_<={k - i}") for i in range(k, -1, -1)]


@dataclass(frozen=True)
class Copy:
    """A copy of the ``i``-th term inside the ``l``-th one, for the Schubert
    cell ``lam`` of ``Gr(i - l, i)``.  ``lam`` is padded to ``i - l`` parts."""

    i: int
    l: int
    lam: Partition

    @property
    def r(self) -> int:
        return sum(self.lam)

    @property
    def degree(self) -> int:
        i, l = self.i, self.l
        return -l * l - l - 2 * i * (i - l) - 2 * self.r

    def as_dict(self) -> dict:
        return {"l": self.l, "lambda": list(strip(self.lam)), "r": self.r, "degree": self.degree}


def copies_of_term(i: int, l: int) -> list[Copy]:
    if not 0 <= l < i:
        raise ValueError(f"need 0 <= l < i, got l={l}, i={i}")
    return [Copy(i, l, pad(p, i - l)) for p in enumerate_in_box(i - l, l)]


def partner(c: Copy) -> Copy | None:
    """The copy ``c`` cancels against, or ``None`` for the leftover."""
    i, l, lam = c.i, c.l, c.lam
    rows = i - l
    if lam[rows - 1] > 0:
        # delete the full first column
        return Copy(i, l - 1, tuple(p - 1 for p in lam) + (0,))
    if l + 1 >= i:
        return None
    return Copy(i, l + 1, tuple(p + 1 for p in lam[: rows - 1]))


@dataclass(frozen=True)
class Matching:
    i: int
    pairs: tuple[tuple[Copy, Copy], ...]
    leftover: Copy

    @property
    def leftover_degree_alt(self) -> int:
        """The same copy under the ``<-i^2 - 1>`` normalisation."""
        return -self.i * self.i - 1


def cancellation_matching(i: int) -> Matching:
    """Pair all copies over ``l = 0 .. i-1`` by adding/removing a first column."""
    if i < 1:
        raise ValueError("need i >= 1")
    copies = [c for l in range(i) for c in copies_of_term(i, l)]
    present = set(copies)
    pairs = []
    leftovers = []
    for c in copies:
        p = partner(c)
        if p is None:
            leftovers.append(c)
            continue
        if p not in present or partner(p) != c:
            raise MatchingError(f"{c} has no valid partner ({p})")
        if p.degree != c.degree:
            raise MatchingError(f"degree mismatch between {c} and {p}")
        if c.l < p.l:
            pairs.append((c, p))
    if len(leftovers) != 1:
        raise MatchingError(f"expected one leftover copy, got {leftovers}")
    left = leftovers[0]
    if (left.l, strip(left.lam)) != (i - 1, ()):
        raise MatchingError(f"unexpected leftover {left}")
    if 2 * len(pairs) + 1 != len(copies):
        raise MatchingError("pairing does not cover every copy")
    return Matching(i, tuple(pairs), left)
