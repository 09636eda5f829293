from collections import Counter

import pytest
from hypothesis import given, strategies as st

from window_calculus.characters import (
    SymLaurentPoly,
    SymmetryError,
    character,
    decompose_into_schur,
    exterior_power_character,
    adjoint_weights,
    schur_polynomial,
    weight_multiset,
    weyl_dimension,
)

mono = SymLaurentPoly.monomial


def dominant_weights(k, lo=-2, hi=3):
    return st.lists(st.integers(lo, hi), min_size=k, max_size=k).map(lambda xs: tuple(sorted(xs, reverse=True)))


def test_schur_examples():
    assert schur_polynomial((1, 0)) == mono((1, 0)) + mono((0, 1))
    assert schur_polynomial((1, 1)) == mono((1, 1))
    assert schur_polynomial((2, 0)) == mono((2, 0)) + mono((1, 1)) + mono((0, 2))


def test_schur_negative_weight_is_dual():
    assert schur_polynomial((0, -1)) == mono((-1, 0)) + mono((0, -1))


def test_decompose_examples():
    v = mono((1, 0)) + mono((0, 1))
    assert decompose_into_schur(v * v) == {(2, 0): 1, (1, 1): 1}
    assert decompose_into_schur(schur_polynomial((1, 0))) == {(1, 0): 1}
    with pytest.raises(SymmetryError):
        decompose_into_schur(mono((1, 0)))


def test_weight_multiset_examples():
    assert weight_multiset((1, 0)) == Counter({(1, 0): 1, (0, 1): 1})
    assert weight_multiset((1, 1)) == Counter({(1, 1): 1})
    assert weight_multiset((2, 0)) == Counter({(2, 0): 1, (1, 1): 1, (0, 2): 1})


@given(st.integers(1, 3).flatmap(dominant_weights))
def test_schur_roundtrip_and_dimension(lam):
    s = schur_polynomial(lam)
    assert s.is_symmetric()
    assert decompose_into_schur(s) == {lam: 1}
    assert s.evaluate_at_ones() == weyl_dimension(lam) == sum(weight_multiset(lam).values())


@given(st.integers(1, 3).flatmap(lambda k: st.tuples(dominant_weights(k), dominant_weights(k))))
def test_character_of_decomposition(pair):
    a, b = pair
    k = len(a)
    f = schur_polynomial(a) * schur_polynomial(b)
    assert character(decompose_into_schur(f), k) == f


def test_divide_by_difference_rejects_remainder():
    with pytest.raises(ArithmeticError):
        mono((1, 0)).divide_by_difference(0, 1)


def test_wedge_of_adjoint_dimension():
    from math import comb

    for k in (1, 2):
        for r in range(k * k + 1):
            assert exterior_power_character(adjoint_weights(k), r, k).evaluate_at_ones() == comb(k * k, r)
