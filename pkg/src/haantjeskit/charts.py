"""Coordinate charts and differentiable tensor fields over complex scalars.

Fields are immutable wrappers around pure component functions.  A component
function receives the coordinate tuple (plain complex numbers, or jets when
a derivative is requested) and returns the components as nested lists.  All
derived fields (brackets, differentials, transported tensors, ...) are built
the same way, so they remain differentiable to the depth the computation
needs.

Real charts embed with zero imaginary parts; every evaluation is pure and
deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from . import jets
from .jets import Jet

__all__ = [
    "Chart", "Point", "ChartError", "ChartMismatchError", "SingularPointError",
    "ScalarField", "VectorField", "OneFormField", "OperatorField",
    "BivectorField", "ChartMap",
    "partial_derivative", "differential", "exterior_derivative", "wedge",
    "apply_operator", "apply_transpose", "lie_bracket", "pairing",
    "add_fields", "scale_field", "compose_operators", "operator_polynomial",
    "identity_operator", "constant_operator", "constant_vector",
    "coordinate_function", "constant_scalar",
]

_SINGULAR_TOL = 1e-13


class ChartError(Exception):
    pass


class ChartMismatchError(ChartError):
    pass


class SingularPointError(ChartError):
    pass


@dataclass(frozen=True)
class Chart:
    """A named coordinate chart of fixed dimension.

    ``singular`` lists scalar functions of the coordinates whose zero sets
    are excluded from the chart domain; samplers keep a margin away from
    them and evaluation raises exactly on them.
    """

    name: str
    dim: int
    coord_names: tuple = ()
    singular: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if not self.coord_names:
            object.__setattr__(
                self, "coord_names",
                tuple(f"x{i + 1}" for i in range(self.dim)))
        if len(self.coord_names) != self.dim:
            raise ChartError("coordinate-name count does not match dimension")


@dataclass(frozen=True)
class Point:
    chart: Chart
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != self.chart.dim:
            raise ChartError(
                f"point has {len(self.coords)} coordinates, chart "
                f"{self.chart.name!r} has dimension {self.chart.dim}")
        vals = tuple(complex(c) for c in self.coords)
        for v in vals:
            if not (math.isfinite(v.real) and math.isfinite(v.imag)):
                raise ChartError("non-finite coordinate")
        object.__setattr__(self, "coords", vals)


def _same_chart(a, b):
    if a.name != b.name or a.dim != b.dim:
        raise ChartMismatchError(f"chart mismatch: {a.name!r} vs {b.name!r}")


class _Field:
    """Base for all field kinds: a chart plus a pure component function."""

    def __init__(self, chart: Chart, fn: Callable):
        self.chart = chart
        self.fn = fn

    def _require(self, p: Point):
        _same_chart(self.chart, p.chart)
        for s in self.chart.singular:
            if abs(s(list(p.coords))) < _SINGULAR_TOL:
                raise SingularPointError(
                    f"point lies on a singular set of chart {self.chart.name!r}")


def _strip_scalar(v):
    return complex(jets.value(v))


def _strip_vector(vals):
    return np.array([complex(jets.value(v)) for v in vals], dtype=complex)


def _strip_matrix(rows):
    return np.array([[complex(jets.value(v)) for v in row] for row in rows],
                    dtype=complex)


class ScalarField(_Field):

    def __call__(self, p: Point) -> complex:
        self._require(p)
        return _strip_scalar(self.fn(list(p.coords)))

    def gradient(self, p: Point) -> np.ndarray:
        self._require(p)
        n = self.chart.dim
        r = self.fn(jets.seed(list(p.coords)))
        return _strip_vector(jets.gradient(r, n))

    def partial(self, p: Point, k: int) -> complex:
        if not 0 <= k < self.chart.dim:
            raise IndexError(f"coordinate index {k} out of range")
        return complex(self.gradient(p)[k])


class _VectorLike(_Field):

    def __call__(self, p: Point) -> np.ndarray:
        self._require(p)
        return _strip_vector(self.fn(list(p.coords)))

    def jacobian(self, p: Point) -> np.ndarray:
        """Component derivatives; ``[i, k]`` is the k-th partial of the i-th
        component."""
        self._require(p)
        n = self.chart.dim
        comps = self.fn(jets.seed(list(p.coords)))
        return np.array([[complex(jets.value(g))
                          for g in jets.gradient(c, n)] for c in comps],
                        dtype=complex)

    def partial(self, p: Point, k: int) -> np.ndarray:
        if not 0 <= k < self.chart.dim:
            raise IndexError(f"coordinate index {k} out of range")
        return self.jacobian(p)[:, k]


class VectorField(_VectorLike):
    pass


class OneFormField(_VectorLike):
    pass


class _MatrixLike(_Field):

    def __call__(self, p: Point) -> np.ndarray:
        self._require(p)
        return _strip_matrix(self.fn(list(p.coords)))

    def jacobian(self, p: Point) -> np.ndarray:
        """Component derivatives; ``[i, j, k]`` is the k-th partial of the
        ``(i, j)`` component."""
        self._require(p)
        n = self.chart.dim
        rows = self.fn(jets.seed(list(p.coords)))
        return np.array(
            [[[complex(jets.value(g)) for g in jets.gradient(c, n)]
              for c in row] for row in rows], dtype=complex)

    def partial(self, p: Point, k: int) -> np.ndarray:
        if not 0 <= k < self.chart.dim:
            raise IndexError(f"coordinate index {k} out of range")
        return self.jacobian(p)[:, :, k]


class OperatorField(_MatrixLike):
    pass


class BivectorField(_MatrixLike):

    def skew_residual(self, p: Point) -> float:
        m = self(p)
        return float(np.max(np.abs(m + m.T)))


def partial_derivative(f, p: Point, k: int):
    """k-th partial derivative of any field kind at ``p``."""
    return f.partial(p, k)


# -- jet-generic internal evaluation (inputs may already be jets) -----------

def _eval_scalar(f: ScalarField, x):
    return f.fn(x)


def _grad_scalar(f: ScalarField, x):
    n = len(x)
    return jets.gradient(f.fn(jets.seed(x)), n)


def _eval_vector(f, x):
    return list(f.fn(x))


def _jac_vector(f, x):
    n = len(x)
    comps = f.fn(jets.seed(x))
    vals = [jets.value(c) for c in comps]
    grads = [jets.gradient(c, n) for c in comps]
    return vals, grads


def _eval_matrix(f, x):
    return [list(row) for row in f.fn(x)]


def _zip_dot(row, vec):
    return sum(a * b for a, b in zip(row, vec))


# -- field algebra ----------------------------------------------------------

def differential(f: ScalarField) -> OneFormField:
    return OneFormField(f.chart, lambda x: _grad_scalar(f, x))


def exterior_derivative(alpha: OneFormField, p: Point) -> np.ndarray:
    """Pointwise exterior derivative; antisymmetric matrix with
    ``[i, j] = d_i alpha_j - d_j alpha_i``."""
    J = alpha.jacobian(p)
    return J.T - J


def wedge(X: VectorField, Z: VectorField) -> BivectorField:
    _same_chart(X.chart, Z.chart)

    def fn(x):
        xv, zv = _eval_vector(X, x), _eval_vector(Z, x)
        return [[xv[i] * zv[j] - xv[j] * zv[i] for j in range(len(xv))]
                for i in range(len(xv))]

    return BivectorField(X.chart, fn)


def apply_operator(L: OperatorField, X: VectorField) -> VectorField:
    _same_chart(L.chart, X.chart)

    def fn(x):
        m, v = _eval_matrix(L, x), _eval_vector(X, x)
        return [_zip_dot(row, v) for row in m]

    return VectorField(L.chart, fn)


def apply_transpose(L: OperatorField, alpha: OneFormField) -> OneFormField:
    _same_chart(L.chart, alpha.chart)

    def fn(x):
        m, a = _eval_matrix(L, x), _eval_vector(alpha, x)
        n = len(a)
        return [sum(m[i][j] * a[i] for i in range(n)) for j in range(n)]

    return OneFormField(L.chart, fn)


def lie_bracket(X: VectorField, Y: VectorField) -> VectorField:
    _same_chart(X.chart, Y.chart)

    def fn(x):
        xv, xg = _jac_vector(X, x)
        yv, yg = _jac_vector(Y, x)
        n = len(xv)
        return [sum(xv[j] * yg[i][j] - yv[j] * xg[i][j] for j in range(n))
                for i in range(n)]

    return VectorField(X.chart, fn)


def pairing(alpha: OneFormField, X: VectorField) -> ScalarField:
    _same_chart(alpha.chart, X.chart)
    return ScalarField(
        alpha.chart,
        lambda x: _zip_dot(_eval_vector(alpha, x), _eval_vector(X, x)))


def add_fields(a, b):
    _same_chart(a.chart, b.chart)
    if type(a) is not type(b):
        raise TypeError("can only add fields of the same kind")
    if isinstance(a, ScalarField):
        return ScalarField(a.chart, lambda x: a.fn(x) + b.fn(x))
    if isinstance(a, _VectorLike):
        def fn(x):
            av, bv = _eval_vector(a, x), _eval_vector(b, x)
            return [u + v for u, v in zip(av, bv)]
        return type(a)(a.chart, fn)

    def fn(x):
        am, bm = _eval_matrix(a, x), _eval_matrix(b, x)
        return [[u + v for u, v in zip(ra, rb)] for ra, rb in zip(am, bm)]
    return type(a)(a.chart, fn)


def scale_field(s, f):
    """Multiply a field by a constant or by a scalar field."""
    if isinstance(s, ScalarField):
        _same_chart(s.chart, f.chart)
        sval = lambda x: s.fn(x)
    else:
        sval = lambda x: s
    if isinstance(f, ScalarField):
        return ScalarField(f.chart, lambda x: sval(x) * f.fn(x))
    if isinstance(f, _VectorLike):
        return type(f)(f.chart,
                       lambda x: [sval(x) * v for v in _eval_vector(f, x)])
    return type(f)(f.chart,
                   lambda x: [[sval(x) * v for v in row]
                              for row in _eval_matrix(f, x)])


def compose_operators(L: OperatorField, M: OperatorField) -> OperatorField:
    _same_chart(L.chart, M.chart)

    def fn(x):
        a, b = _eval_matrix(L, x), _eval_matrix(M, x)
        n = len(a)
        return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)]
                for i in range(n)]

    return OperatorField(L.chart, fn)


def operator_polynomial(L: OperatorField, coeffs: Sequence) -> OperatorField:
    """``sum_k coeffs[k] L^k`` with constant or scalar-field coefficients."""

    def fn(x):
        n = L.chart.dim
        m = _eval_matrix(L, x)
        power = [[1.0 if i == j else 0.0 for j in range(n)] for i in range(n)]
        acc = [[0.0 for _ in range(n)] for _ in range(n)]
        for k, c in enumerate(coeffs):
            if k > 0:
                power = [[sum(power[i][l] * m[l][j] for l in range(n))
                          for j in range(n)] for i in range(n)]
            cv = c.fn(x) if isinstance(c, ScalarField) else c
            acc = [[acc[i][j] + cv * power[i][j] for j in range(n)]
                   for i in range(n)]
        return acc

    return OperatorField(L.chart, fn)


# -- simple constructors ----------------------------------------------------

def constant_scalar(chart: Chart, c) -> ScalarField:
    return ScalarField(chart, lambda x: c)


def coordinate_function(chart: Chart, k: int) -> ScalarField:
    if not 0 <= k < chart.dim:
        raise IndexError(f"coordinate index {k} out of range")
    return ScalarField(chart, lambda x: x[k])


def constant_vector(chart: Chart, v) -> VectorField:
    v = list(v)
    return VectorField(chart, lambda x: list(v))


def identity_operator(chart: Chart) -> OperatorField:
    n = chart.dim
    return OperatorField(
        chart,
        lambda x: [[1.0 if i == j else 0.0 for j in range(n)]
                   for i in range(n)])


def constant_operator(chart: Chart, m) -> OperatorField:
    rows = [list(r) for r in m]
    return OperatorField(chart, lambda x: [list(r) for r in rows])


class ChartMap:
    """A differentiable coordinate change with an explicit inverse.

    Tensor transport uses the forward jacobian and the jacobian of the
    inverse map, so no matrix inversion is ever performed and transported
    fields stay differentiable.
    """

    def __init__(self, src: Chart, dst: Chart, forward: Callable,
                 inverse: Callable):
        self.src = src
        self.dst = dst
        self.forward = forward
        self.inverse = inverse

    def apply(self, p: Point) -> Point:
        _same_chart(self.src, p.chart)
        return Point(self.dst, tuple(
            complex(jets.value(v)) for v in self.forward(list(p.coords))))

    def invert(self, q: Point) -> Point:
        _same_chart(self.dst, q.chart)
        return Point(self.src, tuple(
            complex(jets.value(v)) for v in self.inverse(list(q.coords))))

    def jacobian(self, p: Point) -> np.ndarray:
        """Forward jacobian ``[i, k] = d(dst_i)/d(src_k)`` at a source point."""
        _same_chart(self.src, p.chart)
        n = self.src.dim
        out = self.forward(jets.seed(list(p.coords)))
        return np.array([[complex(jets.value(g))
                          for g in jets.gradient(c, n)] for c in out],
                        dtype=complex)

    # jet-generic helpers used by the transported fields
    def _fwd_jac(self, x):
        n = len(x)
        out = self.forward(jets.seed(x))
        return [jets.gradient(c, n) for c in out]

    def _inv_jac(self, xi):
        n = len(xi)
        out = self.inverse(jets.seed(xi))
        return [jets.gradient(c, n) for c in out]

    def push_scalar(self, f: ScalarField) -> ScalarField:
        _same_chart(self.src, f.chart)
        return ScalarField(self.dst, lambda xi: f.fn(self.inverse(xi)))

    def push_vector(self, X: VectorField) -> VectorField:
        _same_chart(self.src, X.chart)

        def fn(xi):
            x = self.inverse(xi)
            J = self._fwd_jac(x)
            v = _eval_vector(X, x)
            return [_zip_dot(row, v) for row in J]

        return VectorField(self.dst, fn)

    def push_oneform(self, alpha: OneFormField) -> OneFormField:
        _same_chart(self.src, alpha.chart)

        def fn(xi):
            x = self.inverse(xi)
            Jinv = self._inv_jac(xi)  # [src_i][dst_j]
            a = _eval_vector(alpha, x)
            n = len(xi)
            return [sum(a[i] * Jinv[i][j] for i in range(len(a)))
                    for j in range(n)]

        return OneFormField(self.dst, fn)

    def push_bivector(self, P: BivectorField) -> BivectorField:
        _same_chart(self.src, P.chart)

        def fn(xi):
            x = self.inverse(xi)
            J = self._fwd_jac(x)
            m = _eval_matrix(P, x)
            n = len(xi)
            ns = len(x)
            jm = [[_zip_dot(J[i], [m[k][j] for k in range(ns)])
                   for j in range(ns)] for i in range(n)]
            return [[_zip_dot(jm[i], J[j]) for j in range(n)]
                    for i in range(n)]

        return BivectorField(self.dst, fn)

    def push_operator(self, L: OperatorField) -> OperatorField:
        _same_chart(self.src, L.chart)

        def fn(xi):
            x = self.inverse(xi)
            J = self._fwd_jac(x)
            Jinv = self._inv_jac(xi)  # [src_k][dst_j]
            m = _eval_matrix(L, x)
            n = len(xi)
            ns = len(x)
            jl = [[_zip_dot(J[i], [m[k][j] for k in range(ns)])
                   for j in range(ns)] for i in range(n)]
            return [[sum(jl[i][k] * Jinv[k][j] for k in range(ns))
                     for j in range(n)] for i in range(n)]

        return OperatorField(self.dst, fn)
