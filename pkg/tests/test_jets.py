"""Forward-mode jet arithmetic against closed forms and the
finite-difference oracle."""

import cmath

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from haantjeskit import jets
from haantjeskit.jets import Jet, cos_, sin_, sqrt_

from conftest import fd_gradient

finite_complex = st.complex_numbers(min_magnitude=0.0, max_magnitude=3.0,
                                    allow_nan=False, allow_infinity=False)


def test_seed_gradients_are_unit_vectors():
    xs = jets.seed([1.0, 2.0, 3.0])
    for i, x in enumerate(xs):
        assert x.grad[i] == 1.0
        assert sum(abs(g) for j, g in enumerate(x.grad) if j != i) == 0.0


def test_rational_function_gradient_exact():
    x, y = jets.seed([2.0 + 0.0j, 3.0 + 0.0j])
    f = (x * x * y + 1.0) / (y - x)
    # f = (x^2 y + 1)/(y - x); df/dx = (2xy (y-x) + (x^2 y + 1))/(y-x)^2
    assert abs(f.val - 13.0) < 1e-14
    assert abs(f.grad[0] - (12.0 + 13.0)) < 1e-12
    assert abs(f.grad[1] - (4.0 - 13.0)) < 1e-12


@given(st.lists(finite_complex, min_size=2, max_size=4))
@settings(max_examples=50, deadline=None)
def test_polynomial_gradient_matches_fd(coords):
    def fn(x):
        acc = 1.0
        for i, v in enumerate(x):
            acc = acc + (i + 1) * v + v * v * x[0]
        return acc

    xs = jets.seed(list(coords))
    got = np.array(jets.gradient(fn(xs), len(coords)), dtype=complex)
    want = fd_gradient(fn, coords, h=1e-5)
    assert np.max(np.abs(got - want)) < 1e-6 * (1.0 + np.max(np.abs(want)))


def test_transcendental_chain_rule():
    (x,) = jets.seed([0.7 + 0.2j])
    f = sin_(x) * cos_(x) + sqrt_(x + 2.0)
    v = 0.7 + 0.2j
    want_val = cmath.sin(v) * cmath.cos(v) + cmath.sqrt(v + 2.0)
    want_der = cmath.cos(2.0 * v) + 0.5 / cmath.sqrt(v + 2.0)
    assert abs(f.val - want_val) < 1e-14
    assert abs(f.grad[0] - want_der) < 1e-13


def test_nested_jets_second_derivative():
    # second derivative of x^3 at x = 2 is 12, via one jet level inside
    # another
    def d1(xval):
        (x,) = jets.seed([xval])
        return (x * x * x).grad[0]

    (outer,) = jets.seed([2.0 + 0.0j])
    second = d1(outer).grad[0]
    assert abs(jets.value(second) - 12.0) < 1e-12


def test_division_and_reciprocal():
    x, y = jets.seed([4.0 + 0.0j, 2.0 + 0.0j])
    f = 1.0 / x + y / x
    assert abs(f.val - 0.75) < 1e-14
    assert abs(f.grad[0] - (-1.0 / 16.0 - 2.0 / 16.0)) < 1e-14
    assert abs(f.grad[1] - 0.25) < 1e-14


def test_integer_powers_only():
    (x,) = jets.seed([2.0 + 0.0j])
    assert abs((x ** 3).val - 8.0) < 1e-14
    assert abs((x ** 0).val - 1.0) < 1e-14
    with pytest.raises(TypeError):
        x ** 0.5
    with pytest.raises(TypeError):
        x ** (-1)


def test_value_and_gradient_of_constants():
    assert jets.value(3.5) == 3.5
    assert jets.gradient(3.5, 2) == [0.0, 0.0]


@given(finite_complex, finite_complex)
@settings(max_examples=50, deadline=None)
def test_product_rule(a, b):
    x, y = jets.seed([a, b])
    f = x * y
    assert abs(f.grad[0] - b) < 1e-12
    assert abs(f.grad[1] - a) < 1e-12


def test_repr_mentions_value():
    j = Jet(1.0, (0.5,))
    assert "Jet" in repr(j)
