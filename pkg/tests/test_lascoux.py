import pytest

from window_calculus.lascoux import (
    LascouxSetup,
    SetupError,
    SlotSpace,
    grade_terms,
    grassmannian_pushforward,
    lascoux_euler_check,
    lascoux_terms,
    main_theorem_terms,
    needs_window_resolution,
    resolution_I,
    resolution_I_setups,
)
from window_calculus.rickard import betti
from window_calculus.tensorcalc import exterior_power_hom
from window_calculus.weights import enumerate_dominant_in_interval, enumerate_in_box, pad


def summary(terms):
    return [
        (t.index, c.ambient, c.coefficients, c.degree, c.mult) for t in terms for c in t.contributions
    ]


def test_point_koszul():
    s = LascouxSetup(1, 1, (), (0,), ((SlotSpace("A", 1), SlotSpace("B", 1)),))
    assert summary(lascoux_terms(s)) == [
        (0, (0,), (("A", (0,)), ("B", (0,))), 0, 1),
        (-1, (0,), (("A", (1,)), ("B", (1,))), 0, 1),
    ]


def test_inconsistent_ranks():
    with pytest.raises(SetupError):
        LascouxSetup(1, 3, (0, 0), (0,), ((SlotSpace("S", 2), SlotSpace("Q", 2)),))
    with pytest.raises(SetupError):
        LascouxSetup(1, 3, (0,), (0,), ())
    with pytest.raises(SetupError):
        LascouxSetup(1, 2, (0,), (0,), ((SlotSpace("V'", 2), SlotSpace("Q", 1)),), {"V'": (0,)})


def test_resolution_k1_i1():
    assert summary(resolution_I(1, 1)) == [
        (0, (0,), (("V'", (0,)),), 0, 1),
        (-1, (-1,), (("V'", (1,)),), 0, 1),
    ]
    with pytest.raises(ValueError):
        resolution_I(1, 2)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_resolution_i0_is_cauchy_koszul(k):
    expected = [
        (-p, pad(tuple(-x for x in reversed(pad(beta, k))), k), (("V'", pad(alpha, k)),), -2 * p, 1)
        for p in range(k * k + 1)
        for alpha, beta in exterior_power_hom(p, k, k)
    ]
    assert sorted(summary(resolution_I(k, 0))) == sorted(expected)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_resolution_box_property(k):
    for i in range(k + 1):
        terms = resolution_I(k, i)
        assert terms[0].index == 0
        assert all(t.index <= 0 for t in terms)
        for _, lam, _ in grade_terms(terms):
            assert all(0 <= e <= k for e in lam)


@pytest.mark.parametrize("k", [1, 2])
def test_resolution_euler_conservation(k):
    for i in range(k + 1):
        for _, setup in resolution_I_setups(k, i):
            assert lascoux_euler_check(setup)


@pytest.mark.parametrize("i, l", [(2, 1), (3, 1), (4, 2), (5, 2), (3, 0), (3, 3)])
def test_grassmannian_pushforward_is_de_rham(i, l):
    terms = grassmannian_pushforward(i, l)
    assert [t.index for t in terms] == [0]
    got = {c.degree: c.mult for c in terms[0].contributions}
    assert all(c.ambient == (0,) * i for c in terms[0].contributions)
    assert got == {-2 * r: betti(i, l, r) for r in range(l * (i - l) + 1)}


def test_window_pushforward_p1():
    assert summary(main_theorem_terms(1, 2, (0,), (0,))) == [(0, (0, 0), (("V'", (0,)),), 0, 1)]


@pytest.mark.parametrize("k, N", [(1, 2), (1, 3), (2, 4), (2, 5)])
def test_window_pushforward_window_property(k, N):
    for mu in enumerate_in_box(k, k):
        for lam in enumerate_dominant_in_interval(k, 0, k):
            terms = main_theorem_terms(k, N, pad(mu, k), lam)
            assert terms[0].index == 0
            assert any(c.coefficient("V'") == lam and c.mult for c in terms[0].contributions if c.degree == 0)
            for t in terms:
                assert t.index <= 0
                for c in t.contributions:
                    assert all(0 <= e < N for e in c.coefficient("V'"))


def test_window_pushforward_example():
    for t in main_theorem_terms(2, 5, (0, 0), (1, 0)):
        for c in t.contributions:
            assert all(0 <= e < 5 for e in c.coefficient("V'"))


def test_window_pushforward_euler_conservation():
    from window_calculus.lascoux import LascouxSetup as LS, QUOT

    for mu in enumerate_in_box(2, 2):
        for lam in enumerate_dominant_in_interval(2, 0, 2):
            cot = ((SlotSpace("V'", 2), SlotSpace(QUOT, 2, dual=True)),)
            setup = LS(2, 4, (0, 0), tuple(-x for x in reversed(pad(mu, 2))), cot, {"V'": lam}, ambient="C^N")
            assert lascoux_euler_check(setup)


def test_window_pushforward_preconditions():
    with pytest.raises(ValueError):
        main_theorem_terms(3, 5, (0, 0, 0), (0, 0, 0))
    with pytest.raises(ValueError):
        main_theorem_terms(2, 4, (0, 0), (2, 0))


def test_needs_window_resolution_reports_boundary_terms():
    flagged = needs_window_resolution(resolution_I(2, 0), 2)
    assert (-2, (2, 0)) in flagged and (-4, (2, 2)) in flagged
    assert all(lam[0] == 2 for _, lam in flagged)
