"""Combinatorial Lascoux resolutions.

For ``pi: U x_P G -> T`` the pushforward of a bundle ``V`` is resolved by

    F^{-n} = sum_{r >= n} H^{r-n}(G/P, V (x) Lambda^r (T/U)^dual).

Here ``G/P`` is a Grassmannian ``Gr(a, b)`` with tautological sub ``S`` and
quotient ``Q``, and ``(T/U)^dual`` is a sum of slot pairs ``A (x) B``.  Slots
labelled ``"S"`` and ``"Q"`` are tautological; every other label is an
external (coefficient) space whose Schur data rides along and is combined by
the Littlewood-Richardson rule.  Cohomology is computed fibrewise with
Borel-Weil-Bott and lands in ``S^nu C^b`` for the ambient ``C^b``.

Only the terms are produced; differentials are not modelled.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Mapping, Sequence

from .bwb import GrWeight, bwb, euler_characteristic_localized
from .tensorcalc import SlotSpace, exterior_power_sum, tensor_decompositions
from .weights import Weight, WeightError, dominant, dual, pad

SUB, QUOT = "S", "Q"


class SetupError(ValueError):
    """Slot ranks inconsistent with the Grassmannian datum."""


@dataclass(frozen=True)
class LascouxSetup:
    """Input datum: ``V = S^quotient Q (x) S^sub S (x) (external Schur data)``."""

    a: int
    b: int
    quotient: Weight
    sub: Weight
    cotangent: tuple[tuple[SlotSpace, SlotSpace], ...]
    coefficients: Mapping[str, Weight] = field(default_factory=dict, hash=False)
    ambient: str = "C^b"

    def __post_init__(self):
        if not 0 <= self.a <= self.b:
            raise SetupError(f"need 0 <= a <= b, got a={self.a}, b={self.b}")
        try:
            dominant(self.quotient, self.b - self.a)
            dominant(self.sub, self.a)
        except WeightError as exc:
            raise SetupError(str(exc)) from exc
        ranks = self.external_ranks()
        for pair in self.cotangent:
            for slot in pair:
                if slot.label == SUB and slot.rank != self.a:
                    raise SetupError(f"slot S has rank {slot.rank}, expected {self.a}")
                if slot.label == QUOT and slot.rank != self.b - self.a:
                    raise SetupError(f"slot Q has rank {slot.rank}, expected {self.b - self.a}")
        for label, w in self.coefficients.items():
            if label in ranks and len(w) != ranks[label]:
                raise SetupError(f"coefficient on {label} has length {len(w)}, slot rank {ranks[label]}")

    def external_ranks(self) -> dict[str, int]:
        ranks: dict[str, int] = {}
        for pair in self.cotangent:
            for slot in pair:
                if slot.label in (SUB, QUOT):
                    continue
                if ranks.setdefault(slot.label, slot.rank) != slot.rank:
                    raise SetupError(f"slot {slot.label} used with two ranks")
        for label, w in self.coefficients.items():
            ranks.setdefault(label, len(w))
        return ranks


@dataclass(frozen=True)
class Contribution:
    """``mult`` copies of ``S^ambient C^b (x) (x)_label S^w label`` in internal
    degree ``degree``."""

    ambient: Weight
    coefficients: tuple[tuple[str, Weight], ...]
    degree: int
    mult: int

    def coefficient(self, label: str) -> Weight:
        return dict(self.coefficients)[label]

    def as_dict(self) -> dict:
        return {
            "ambient": list(self.ambient),
            "coefficients": {lab: list(w) for lab, w in self.coefficients},
            "degree": self.degree,
            "mult": self.mult,
        }


@dataclass(frozen=True)
class LascouxTerm:
    index: int
    contributions: tuple[Contribution, ...]

    def as_dict(self) -> dict:
        return {"index": self.index, "contributions": [c.as_dict() for c in self.contributions]}


def _fibre_data(s: LascouxSetup, term, ranks: Mapping[str, int]):
    """Schur data of ``V (x) term`` split into Q-, S- and external parts."""
    q_dec = {tuple(s.quotient): 1}
    s_dec = {tuple(s.sub): 1}
    ext = {lab: {tuple(w): 1} for lab, w in s.coefficients.items()}
    for (alpha, alpha_c), (x, y) in zip(term.parts, s.cotangent):
        for slot, part in ((x, alpha), (y, alpha_c)):
            w = slot.weight(part)
            if slot.label == QUOT:
                q_dec = tensor_decompositions(q_dec, {w: 1}, s.b - s.a)
            elif slot.label == SUB:
                s_dec = tensor_decompositions(s_dec, {w: 1}, s.a)
            else:
                cur = ext.get(slot.label, {pad((), ranks[slot.label]): 1})
                ext[slot.label] = tensor_decompositions(cur, {w: 1}, ranks[slot.label])
    return q_dec, s_dec, ext


def _raw_contributions(s: LascouxSetup, index_offset: int = 0, degree_offset: int = 0):
    """Yield ``(index, ambient, coefficient items, degree, mult, r, cohomological degree)``."""
    ranks = s.external_ranks()
    top = sum(x.rank * y.rank for x, y in s.cotangent)
    for r in range(top + 1):
        for term in exterior_power_sum(r, s.cotangent):
            q_dec, s_dec, ext = _fibre_data(s, term, ranks)
            labels = sorted(ext)
            for (qw, qm), (sw, sm) in product(q_dec.items(), s_dec.items()):
                res = bwb(GrWeight(s.a, s.b, qw, sw))
                if res.is_zero:
                    continue
                n = r - res.degree
                for combo in product(*(ext[lab].items() for lab in labels)):
                    mult = qm * sm
                    coeffs = []
                    for lab, (w, m) in zip(labels, combo):
                        mult *= m
                        coeffs.append((lab, w))
                    yield (
                        -(n + index_offset),
                        res.weight,
                        tuple(coeffs),
                        term.degree + degree_offset,
                        mult,
                        r,
                        res.degree,
                    )


def _collect(raw) -> list[LascouxTerm]:
    acc: dict[int, dict[tuple, int]] = {}
    for index, amb, coeffs, deg, mult, _r, _d in raw:
        bucket = acc.setdefault(index, {})
        key = (amb, coeffs, deg)
        bucket[key] = bucket.get(key, 0) + mult
    out = []
    for index in sorted(acc, reverse=True):
        contribs = tuple(
            Contribution(amb, coeffs, deg, m)
            for (amb, coeffs, deg), m in sorted(acc[index].items(), key=lambda kv: (-kv[0][2], kv[0]), reverse=False)
            if m
        )
        if contribs:
            out.append(LascouxTerm(index, contribs))
    return out


def lascoux_terms(s: LascouxSetup) -> list[LascouxTerm]:
    """Terms of the resolution, highest index (``0``) first."""
    return _collect(_raw_contributions(s))


def lascoux_euler_check(s: LascouxSetup) -> bool:
    """Compare the alternating sum of terms with ``sum_r (-1)^r chi`` computed
    by fixed-point localization instead of Borel-Weil-Bott."""
    lhs: dict[tuple, int] = {}
    for t in lascoux_terms(s):
        sign = -1 if t.index % 2 else 1
        for c in t.contributions:
            key = (c.ambient, c.coefficients)
            lhs[key] = lhs.get(key, 0) + sign * c.mult
    rhs: dict[tuple, int] = {}
    ranks = s.external_ranks()
    top = sum(x.rank * y.rank for x, y in s.cotangent)
    for r in range(top + 1):
        sign = -1 if r % 2 else 1
        for term in exterior_power_sum(r, s.cotangent):
            q_dec, s_dec, ext = _fibre_data(s, term, ranks)
            labels = sorted(ext)
            for (qw, qm), (sw, sm) in product(q_dec.items(), s_dec.items()):
                chi = euler_characteristic_localized(GrWeight(s.a, s.b, qw, sw))
                for amb, cm in chi.items():
                    for combo in product(*(ext[lab].items() for lab in labels)):
                        mult = sign * qm * sm * cm
                        coeffs = []
                        for lab, (w, m) in zip(labels, combo):
                            mult *= m
                            coeffs.append((lab, w))
                        key = (amb, tuple(coeffs))
                        rhs[key] = rhs.get(key, 0) + mult
    return {k: v for k, v in lhs.items() if v} == {k: v for k, v in rhs.items() if v}


def resolution_I_setups(k: int, i: int) -> list[tuple[int, LascouxSetup]]:
    """One ``(p, setup)`` per summand of the Koszul complex
    ``Lambda^p(V' (x) V_{k-i}^dual)`` over ``Gr(k-i, V_k)``."""
    if not 0 <= i <= k:
        raise ValueError(f"need 0 <= i <= k, got i={i}, k={k}")
    a = k - i
    q_dual = SlotSpace(QUOT, i, dual=True)
    # Hom(V', V_k/V_{k-i}) has weight 0, the gl(V_k)/Lie(P) part weight 2
    cotangent = ((SlotSpace("V'", k), q_dual), (SlotSpace(SUB, a, degree=-2), q_dual))
    koszul = ((SlotSpace("V'", k), SlotSpace(SUB, a, dual=True)),)
    out = []
    for p in range(k * a + 1):
        for kterm in exterior_power_sum(p, koszul):
            ((alpha, alpha_c),) = kterm.parts
            setup = LascouxSetup(
                a, k, (0,) * i, dual(pad(alpha_c, a)), cotangent, {"V'": pad(alpha, k)}, ambient="V_k"
            )
            out.append((p, setup))
    return out


def resolution_I(k: int, i: int) -> list[LascouxTerm]:
    """Terms resolving ``p_* O`` of the rank-``(k-i)`` intertwining locus.

    Each Koszul term is pushed forward separately and lands in index
    ``-(p + n)``.  The ambient ``S^nu V_k`` of a contribution is
    ``S^mu V_k^dual`` with ``mu = dual(nu)``.
    """
    raw = []
    for p, setup in resolution_I_setups(k, i):
        raw.extend(_raw_contributions(setup, index_offset=p, degree_offset=-2 * p))
    return _collect(raw)


def main_theorem_terms(k: int, N: int, mu: Sequence[int], lam: Sequence[int]) -> list[LascouxTerm]:
    """Resolve the pushforward of ``S^mu V^dual (x) S^lam V'`` over ``Gr(k, N)``.

    Cotangent datum ``V' (x) (C^N/V)^dual``; the ``V'`` data of every term is
    already contracted by the LR rule into ``S^xi V'``.
    """
    if 2 * k > N:
        raise ValueError(f"need 2k <= N, got k={k}, N={N}")
    mu = dominant(mu, k)
    lam = dominant(lam, k)
    if any(not 0 <= e < k for e in lam):
        raise ValueError(f"lambda={lam} must have entries in [0, {k})")
    cotangent = ((SlotSpace("V'", k), SlotSpace(QUOT, N - k, dual=True)),)
    setup = LascouxSetup(k, N, (0,) * (N - k), dual(mu), cotangent, {"V'": lam}, ambient="C^N")
    return lascoux_terms(setup)


def grassmannian_pushforward(i: int, l: int) -> list[LascouxTerm]:
    """Relative ``Gr(i-l, i)`` fibre: ``Lambda^r(S (x) Q^dual) <-2r>``."""
    if not 0 <= l <= i:
        raise ValueError(f"need 0 <= l <= i, got l={l}, i={i}")
    a = i - l
    cotangent = ((SlotSpace(SUB, a, degree=-2), SlotSpace(QUOT, l, dual=True)),)
    return lascoux_terms(LascouxSetup(a, i, (0,) * l, (0,) * a, cotangent))


def grade_terms(terms: Sequence[LascouxTerm], label: str = "V'") -> list[tuple[Weight, Weight, int]]:
    """``(mu, lam, mult)`` triples for ``S^mu V^dual (x) S^lam V'``."""
    out = []
    for t in terms:
        for c in t.contributions:
            out.append((dual(c.ambient), c.coefficient(label), c.mult))
    return out


def needs_window_resolution(terms: Sequence[LascouxTerm], k: int, label: str = "V'") -> list[tuple[int, Weight]]:
    """Contributions with ``lam_1 = k``, which still have to be resolved by
    magic-window generators; no resolution is fabricated here."""
    out = []
    for t in terms:
        for c in t.contributions:
            lam = c.coefficient(label)
            if lam and lam[0] == k:
                out.append((t.index, lam))
    return sorted(set(out), reverse=True)
