"""Charts, fields, derived-field algebra and chart maps, cross-checked
against the finite-difference oracle."""

import numpy as np
import pytest

from haantjeskit import (BivectorField, Chart, ChartError,
                         ChartMismatchError, ChartMap, OneFormField,
                         OperatorField, Point, ScalarField,
                         SingularPointError, VectorField, add_fields,
                         apply_operator, apply_transpose, compose_operators,
                         constant_operator, constant_scalar, constant_vector,
                         coordinate_function, differential,
                         exterior_derivative, identity_operator, lie_bracket,
                         operator_polynomial, pairing, scale_field, wedge)
from haantjeskit.sampling import sample_points

from conftest import fd_gradient, fd_jacobian, point


def test_point_validation():
    chart = Chart("c2", 2)
    with pytest.raises(ChartError):
        Point(chart, (1.0,))
    with pytest.raises(ChartError):
        Point(chart, (float("nan"), 0.0))


def test_chart_mismatch_raises():
    f = ScalarField(Chart("a", 2), lambda x: x[0])
    p = point(Chart("b", 2), 1.0, 2.0)
    with pytest.raises(ChartMismatchError):
        f(p)


def test_singular_point_raises():
    chart = Chart("s", 2, singular=(lambda x: x[0],))
    f = ScalarField(chart, lambda x: x[1] / x[0])
    with pytest.raises(SingularPointError):
        f(point(chart, 0.0, 1.0))
    assert f(point(chart, 2.0, 4.0)) == 2.0


def test_sampler_respects_margin_and_seed():
    chart = Chart("s", 2, singular=(lambda x: x[0],))
    pts = sample_points(chart, 50, 3, margin=0.25)
    assert all(abs(p.coords[0]) >= 0.25 for p in pts)
    again = sample_points(chart, 50, 3, margin=0.25)
    assert [p.coords for p in pts] == [q.coords for q in again]
    with pytest.raises(ValueError):
        sample_points(chart, 0, 3)


def test_scalar_gradient_matches_fd(chart3, sample3):
    f = ScalarField(chart3, lambda x: x[0] * x[1] ** 2 + x[2] / (x[0] + 4.0))
    for p in sample3[:10]:
        got = f.gradient(p)
        want = fd_gradient(f.fn, p.coords)
        assert np.max(np.abs(got - want)) < 1e-6


def test_vector_jacobian_matches_fd(chart3, sample3):
    X = VectorField(chart3,
                    lambda x: [x[1] * x[2], x[0] ** 2, x[0] + x[1] * x[1]])
    for p in sample3[:10]:
        got = X.jacobian(p)
        want = fd_jacobian(X.fn, p.coords)
        assert np.max(np.abs(got - want)) < 1e-6


def test_operator_jacobian_matches_fd(chart3, sample3):
    L = OperatorField(chart3, lambda x: [[x[i] * x[j] for j in range(3)]
                                         for i in range(3)])
    p = sample3[0]
    got = L.jacobian(p)
    for k in range(3):
        def slice_fn(x, k=k):
            return [row[k] for row in L.fn(x)]
        want = fd_jacobian(slice_fn, p.coords)
        assert np.max(np.abs(got[:, k, :] - want)) < 1e-6


def test_differential_and_exterior_derivative(chart3, sample3):
    f = ScalarField(chart3, lambda x: x[0] ** 3 + x[1] * x[2])
    df = differential(f)
    for p in sample3[:5]:
        assert np.max(np.abs(df(p) - f.gradient(p))) < 1e-14
        # d(df) = 0
        assert np.max(np.abs(exterior_derivative(df, p))) < 1e-12


def test_wedge_antisymmetry(chart3, sample3):
    X = VectorField(chart3, lambda x: [x[0], x[1] * x[2], 1.0])
    Z = VectorField(chart3, lambda x: [x[2], 1.0, x[0] * x[0]])
    W = wedge(X, Z)
    for p in sample3[:5]:
        m = W(p)
        assert np.max(np.abs(m + m.T)) < 1e-14
        n = wedge(Z, X)(p)
        assert np.max(np.abs(m + n)) < 1e-14


def test_lie_bracket_of_coordinate_fields_vanishes(chart3, sample3):
    e0 = constant_vector(chart3, [1.0, 0.0, 0.0])
    e1 = constant_vector(chart3, [0.0, 1.0, 0.0])
    br = lie_bracket(e0, e1)
    for p in sample3[:5]:
        assert np.max(np.abs(br(p))) == 0.0


def test_lie_bracket_antisymmetry(chart3, sample3):
    X = VectorField(chart3, lambda x: [x[1], x[2] ** 2, x[0] * x[1]])
    Y = VectorField(chart3, lambda x: [x[0] * x[2], 1.0, x[1]])
    a = lie_bracket(X, Y)
    b = lie_bracket(Y, X)
    for p in sample3[:5]:
        assert np.max(np.abs(a(p) + b(p))) < 1e-12


def test_operator_algebra(chart3, sample3):
    L = OperatorField(chart3, lambda x: [[x[0], 1.0, 0.0],
                                         [0.0, x[1], 0.0],
                                         [0.0, 0.0, x[2]]])
    I = identity_operator(chart3)
    p = sample3[0]
    assert np.max(np.abs(compose_operators(L, I)(p) - L(p))) < 1e-14
    sq = operator_polynomial(L, [0.0, 0.0, 1.0])
    assert np.max(np.abs(sq(p) - L(p) @ L(p))) < 1e-13
    f = constant_scalar(chart3, 2.0)
    comb = add_fields(scale_field(f, L), scale_field(-2.0, L))
    assert np.max(np.abs(comb(p))) < 1e-14


def test_apply_operator_and_transpose(chart3, sample3):
    L = OperatorField(chart3, lambda x: [[x[0], x[1], 0.0],
                                         [1.0, 0.0, x[2]],
                                         [0.0, 2.0, x[0]]])
    X = VectorField(chart3, lambda x: [1.0, x[0], x[2]])
    a = OneFormField(chart3, lambda x: [x[1], 0.0, 1.0])
    p = sample3[0]
    assert np.max(np.abs(apply_operator(L, X)(p) - L(p) @ X(p))) < 1e-14
    assert np.max(np.abs(apply_transpose(L, a)(p) - L(p).T @ a(p))) < 1e-14


def test_pairing_invariant_under_chart_map(chart3, sample3):
    # cubic-shear change of coordinates with exact inverse
    dst = Chart("shifted", 3)
    cmap = ChartMap(
        chart3, dst,
        lambda x: [x[0], x[1] + x[0] ** 2, x[2] + x[0] * x[1]],
        lambda y: [y[0], y[1] - y[0] ** 2,
                   y[2] - y[0] * (y[1] - y[0] ** 2)])
    f = ScalarField(chart3, lambda x: x[0] * x[2] + x[1] ** 2)
    X = VectorField(chart3, lambda x: [x[1], 1.0, x[0]])
    s = pairing(differential(f), X)
    pushed = pairing(differential(cmap.push_scalar(f)), cmap.push_vector(X))
    for p in sample3[:8]:
        q = cmap.apply(p)
        assert abs(s(p) - pushed(q)) < 1e-10
        back = cmap.invert(q)
        assert np.max(np.abs(np.array(back.coords)
                             - np.array(p.coords))) < 1e-12


def test_bivector_and_operator_transport_consistency(chart3, sample3):
    dst = Chart("shifted", 3)
    cmap = ChartMap(
        chart3, dst,
        lambda x: [x[0], x[1] + x[0] ** 2, x[2] + x[0] * x[1]],
        lambda y: [y[0], y[1] - y[0] ** 2,
                   y[2] - y[0] * (y[1] - y[0] ** 2)])
    P = BivectorField(chart3, lambda x: [[0.0, x[0], -1.0],
                                         [-x[0], 0.0, x[1]],
                                         [1.0, -x[1], 0.0]])
    L = OperatorField(chart3, lambda x: [[x[0], 0.0, 1.0],
                                         [0.0, x[1], 0.0],
                                         [0.0, 1.0, x[2]]])
    for p in sample3[:5]:
        q = cmap.apply(p)
        J = cmap.jacobian(p)
        assert np.max(np.abs(cmap.push_bivector(P)(q)
                             - J @ P(p) @ J.T)) < 1e-10
        got = cmap.push_operator(L)(q)
        want = J @ L(p) @ np.linalg.inv(J)
        assert np.max(np.abs(got - want)) < 1e-9


def test_coordinate_function_and_constant_operator(chart3):
    p = point(chart3, 1.0, 2.0, 3.0)
    assert coordinate_function(chart3, 1)(p) == 2.0
    with pytest.raises(IndexError):
        coordinate_function(chart3, 5)
    M = constant_operator(chart3, np.eye(3) * 2.0)
    assert np.max(np.abs(M(p) - 2.0 * np.eye(3))) == 0.0
