from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from window_calculus.weights import WeightError
from window_calculus.windows import (
    GenericityError,
    adjunction_shift,
    fixed_window,
    in_window,
    kernel_descriptor,
    magic_generators,
    shift_generators,
    shift_window_by_det,
    twisted_window,
    window_interval,
    WindowSpec,
)


def test_window_interval_examples():
    w = window_interval(3, Fraction(2, 5))
    assert (w.lo, w.hi) == (-1, 2)
    assert window_interval(3, "0.4") == w
    with pytest.raises(GenericityError):
        window_interval(2, 0)
    with pytest.raises(GenericityError):
        window_interval(3, "1/2")


@pytest.mark.parametrize("k, N", [(1, 2), (1, 5), (2, 4), (2, 5), (3, 7)])
def test_fixed_and_twisted_windows(k, N):
    w = fixed_window(k, N)
    assert (w.lo, w.hi) == (-k, N - k)
    t = twisted_window(k, N)
    assert (t.lo, t.hi) == (0, N)


@given(st.integers(1, 8), st.fractions(min_value=-5, max_value=5, max_denominator=12))
def test_window_width(N, delta):
    half = Fraction(N, 2)
    if (delta - half).denominator == 1:
        with pytest.raises(GenericityError):
            window_interval(N, delta)
        return
    w = window_interval(N, delta)
    assert w.hi - w.lo == N
    assert w.lo - 1 < delta - half < w.lo


def test_window_spec_validates_width():
    with pytest.raises(ValueError):
        WindowSpec(3, 0, 2)


def test_in_window_examples():
    w = fixed_window(2, 5)
    assert in_window((0, 0), w)
    assert not in_window((3, 0), w)
    assert in_window((1, -1), window_interval(3, Fraction(2, 5)))
    with pytest.raises(WeightError):
        in_window((0, 1), w)


def test_magic_generators_examples():
    for N in range(1, 7):
        assert len(magic_generators(1, WindowSpec(N, -1, N - 1))) == N
    assert len(magic_generators(2, WindowSpec(3, 0, 3))) == 6
    assert magic_generators(2, WindowSpec(2, 0, 2)) == [(0, 0), (1, 0), (1, 1)]


def test_kernel_descriptor_shifts():
    for N in range(0, 6):
        for m in range(N + 1):
            for n in range(m, N + 1):
                assert kernel_descriptor("E", m, n, N).internal_shift == m * n - n * n
                assert kernel_descriptor("F", m, n, N).internal_shift == m * n - m * m
                i, k = n - m, n
                assert kernel_descriptor("Fprime", m, n, N).internal_shift == i * k - i * i
    assert kernel_descriptor("E", 1, 2, 4).det_exponents == {"V_m": -1, "V_n": 2, "C^N": -1}
    with pytest.raises(ValueError):
        kernel_descriptor("G", 0, 0, 0)
    with pytest.raises(ValueError):
        kernel_descriptor("E", 2, 1, 3)


def test_adjunction_shift_examples():
    assert adjunction_shift(2, 2, 5) == 0
    for N in range(2, 9):
        for k in range(1, N // 2 + 1):
            assert adjunction_shift(k - 1, k, N) == N - 2 * k + 1
    assert adjunction_shift(0, 4, 4) == 0


@given(st.integers(1, 3), st.integers(6, 9), st.integers(-3, 3))
def test_det_shift(k, N, d):
    w = fixed_window(k, N)
    s = shift_window_by_det(w, d)
    assert (s.lo, s.hi) == (w.lo + d, w.hi + d)
    assert s.delta == w.delta + d
    assert shift_window_by_det(w, 0) == w
    assert shift_window_by_det(shift_window_by_det(w, -1), 1) == w
    assert sorted(shift_generators(magic_generators(k, w), d)) == magic_generators(k, s)
