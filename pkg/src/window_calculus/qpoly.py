"""Laurent polynomials in a single variable ``q`` with integer coefficients."""

from __future__ import annotations

from typing import Mapping


class QPolynomial:
    """Sparse Laurent polynomial ``sum c_d q**d``; immutable and hashable."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self._coeffs = {int(d): int(c) for d, c in (coeffs or {}).items() if c}

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "QPolynomial":
        return cls({degree: coeff})

    @classmethod
    def constant(cls, c: int) -> "QPolynomial":
        return cls({0: c})

    def coeffs(self) -> dict[int, int]:
        return dict(sorted(self._coeffs.items()))

    def __getitem__(self, degree: int) -> int:
        return self._coeffs.get(degree, 0)

    def degrees(self) -> list[int]:
        return sorted(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = QPolynomial.constant(other)
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __add__(self, other: "QPolynomial | int") -> "QPolynomial":
        if isinstance(other, int):
            other = QPolynomial.constant(other)
        out = dict(self._coeffs)
        for d, c in other._coeffs.items():
            out[d] = out.get(d, 0) + c
        return QPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "QPolynomial":
        return QPolynomial({d: -c for d, c in self._coeffs.items()})

    def __sub__(self, other: "QPolynomial | int") -> "QPolynomial":
        return self + (-other)

    def __mul__(self, other: "QPolynomial | int") -> "QPolynomial":
        if isinstance(other, int):
            return QPolynomial({d: c * other for d, c in self._coeffs.items()})
        out: dict[int, int] = {}
        for d1, c1 in self._coeffs.items():
            for d2, c2 in other._coeffs.items():
                out[d1 + d2] = out.get(d1 + d2, 0) + c1 * c2
        return QPolynomial(out)

    __rmul__ = __mul__

    def shift(self, d: int) -> "QPolynomial":
        """Multiply by ``q**d``."""
        return QPolynomial({e + d: c for e, c in self._coeffs.items()})

    def substitute_power(self, m: int) -> "QPolynomial":
        """Replace ``q`` by ``q**m``."""
        return QPolynomial({e * m: c for e, c in self._coeffs.items()})

    def bar(self) -> "QPolynomial":
        """Replace ``q`` by ``q**-1``."""
        return self.substitute_power(-1)

    def at_one(self) -> int:
        return sum(self._coeffs.values())

    def __repr__(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for d, c in sorted(self._coeffs.items()):
            if d == 0:
                terms.append(str(c))
            else:
                mono = "q" if d == 1 else f"q^{d}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms)


def gaussian_binomial(n: int, m: int) -> QPolynomial:
    """``[n choose m]_q`` by the q-Pascal recursion."""
    if m < 0 or m > n:
        return QPolynomial()
    rows = [[QPolynomial.constant(1)]]
    for row in range(1, n + 1):
        prev = rows[-1]
        cur = []
        for col in range(row + 1):
            if col == 0 or col == row:
                cur.append(QPolynomial.constant(1))
            else:
                # [row, col] = [row-1, col-1] + q^col [row-1, col]
                cur.append(prev[col - 1] + prev[col].shift(col))
        rows.append(cur)
    return rows[n][m]

