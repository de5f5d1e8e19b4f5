"""Restriction to a symplectic leaf of the degenerate Poisson structure and
the separation chart built from the eigenvalues of the restricted operator
family.

The leaf chart keeps the four tangential coordinates ``(x1, x2, y1, y2)``
with the two Casimir levels pinned to constants.
"""

from __future__ import annotations

import numpy as np

from ..charts import (BivectorField, Chart, ChartMap, OneFormField,
                      OperatorField, Point, ScalarField, VectorField,
                      identity_operator)
from ..jets import sqrt_
from .complex_chart import complex_chart, nijenhuis_operator
from .params import TopParams

LX1, LX2, LY1, LY2 = range(4)

_LEAF_COORDS = ("x1", "x2", "y1", "y2")


class LeafRestrictionError(Exception):
    """Raised when a field couples leaf and transversal directions and
    therefore does not restrict."""


def leaf_chart(params: TopParams, C1: complex, C4: complex) -> Chart:
    c = params.c
    return Chart(
        "leaf", 4, _LEAF_COORDS,
        singular=(lambda x: x[LX2],
                  lambda x: x[LX1] ** 2 + (c - 1.0) * C1 * x[LX1] + x[LX2],
                  lambda x: x[LX1] ** 2 + 4.0 * x[LX2]))


def _embed(coords, C1, C4):
    return list(coords) + [C1, C4]


def restrict_to_leaf(field, params: TopParams, C1, C4, *,
                     sample=None, tol: float = 1e-12):
    """Pin the Casimir levels and drop the transversal slots.

    For operators and bivectors the transversal off-blocks are checked to
    vanish on ``sample`` (when given); a nonvanishing coupling means the
    field does not restrict and raises :class:`LeafRestrictionError`.
    """
    chart = leaf_chart(params, C1, C4)

    if isinstance(field, ScalarField):
        return ScalarField(chart, lambda x: field.fn(_embed(x, C1, C4)))
    if isinstance(field, OneFormField):
        return OneFormField(
            chart, lambda x: list(field.fn(_embed(x, C1, C4)))[:4])
    if isinstance(field, VectorField):
        out = VectorField(
            chart, lambda x: list(field.fn(_embed(x, C1, C4)))[:4])
        if sample is not None:
            _check_vector_tangency(field, params, C1, C4, sample, tol)
        return out
    if isinstance(field, (OperatorField, BivectorField)):
        kind = OperatorField if isinstance(field, OperatorField) \
            else BivectorField
        out = kind(chart, lambda x: [row[:4] for row in
                                     field.fn(_embed(x, C1, C4))[:4]])
        if sample is not None:
            _check_block_structure(field, params, C1, C4, sample, tol)
        return out
    raise TypeError(f"cannot restrict field of type {type(field).__name__}")


def _leaf_points_to_full(params, C1, C4, sample):
    full = complex_chart(params)
    return [Point(full, tuple(list(p.coords) + [C1, C4])) for p in sample]


def _check_vector_tangency(field, params, C1, C4, sample, tol):
    for q in _leaf_points_to_full(params, C1, C4, sample):
        v = field(q)
        r = float(np.max(np.abs(v[4:])))
        if r > tol * (1.0 + float(np.max(np.abs(v)))):
            raise LeafRestrictionError(
                f"transversal components do not vanish (residual {r:.3e})")


def _check_block_structure(field, params, C1, C4, sample, tol):
    for q in _leaf_points_to_full(params, C1, C4, sample):
        m = field(q)
        r = max(float(np.max(np.abs(m[:4, 4:]))),
                float(np.max(np.abs(m[4:, :4]))))
        if r > tol * (1.0 + float(np.max(np.abs(m)))):
            raise LeafRestrictionError(
                f"transversal off-blocks do not vanish (residual {r:.3e})")


def leaf_structures(params: TopParams, C1, C4, sample=None) -> dict:
    """All restricted data on one leaf: Poisson blocks, recursion operator,
    the operator pair, and the two restricted integrals."""
    from .complex_chart import (complex_integrals, deformation, p1_complex,
                                benenti_operators, x_fields_complex)
    N = nijenhuis_operator(params)
    K1, K2, _ = benenti_operators(params, N)
    F2c, F3c = complex_integrals(params)
    X1f, X2f = x_fields_complex(params)
    r = lambda f: restrict_to_leaf(f, params, C1, C4, sample=sample)
    chart = leaf_chart(params, C1, C4)
    # the raw second bivector does not restrict (its transversal column
    # carries the ladder field); the deformed bivector does, and its leaf
    # block is the second Poisson block of the pair
    _, _, Q = deformation(params)
    return {
        "chart": chart,
        "P0": r(Q),
        "P1": r(p1_complex(params)),
        "N": r(N),
        "K1": identity_operator(chart),
        "K2": r(K2),
        "F2": r(F2c),
        "F3": r(F3c),
        "X1": r(X1f),
        "X2": r(X2f),
    }


# -- separation chart -------------------------------------------------------

def separation_chart_def(params: TopParams, C1, C4) -> Chart:
    return Chart("separation", 4, ("l1", "l2", "m1", "m2"),
                 singular=(lambda x: x[0] - x[1],
                           lambda x: x[0], lambda x: x[1]))


def _eigenvalues(x1, x2):
    # fixed branch: the first eigenvalue takes the negative square root
    d = sqrt_(x1 * x1 + 4.0 * x2)
    return (x1 - d) / (2.0 * x2), (x1 + d) / (2.0 * x2)


def separation_coordinates(p: Point):
    """Separation variables of a leaf point: the double eigenvalues of the
    restricted operator family and canonically conjugate momenta whose
    gradients are eigenforms."""
    x1, x2, y1, y2 = p.coords
    l1, l2 = _eigenvalues(x1, x2)
    if abs(l1 - l2) < 1e-13:
        raise ValueError("coincident eigenvalues: separation chart breaks down")
    m1 = -(y1 - l1 * y2) / l1 ** 2
    m2 = -(y1 - l2 * y2) / l2 ** 2
    return l1, l2, m1, m2


def printed_momenta(p: Point):
    """The momenta in the form they circulate in the source construction;
    kept for the reported comparison, not used by the chart map (their
    gradients fail to be eigenforms; see the reduced suite finding)."""
    x1, x2, y1, y2 = p.coords
    l1, l2 = _eigenvalues(x1, x2)
    return (l2 * y1 + y2) / l1, (l1 * y1 + y2) / l2


def separation_map(params: TopParams, C1, C4) -> ChartMap:
    src = leaf_chart(params, C1, C4)
    dst = separation_chart_def(params, C1, C4)

    def forward(x):
        x1, x2, y1, y2 = x
        l1, l2 = _eigenvalues(x1, x2)
        m1 = -(y1 - l1 * y2) / l1 ** 2
        m2 = -(y1 - l2 * y2) / l2 ** 2
        return [l1, l2, m1, m2]

    def inverse(s):
        l1, l2, m1, m2 = s
        x2 = -1.0 / (l1 * l2)
        x1 = (l1 + l2) * x2
        # mi li^2 = -y1 + li y2, so the difference isolates y2
        y2 = (m1 * l1 ** 2 - m2 * l2 ** 2) / (l1 - l2)
        y1 = l1 * y2 - m1 * l1 ** 2
        return [x1, x2, y1, y2]

    return ChartMap(src, dst, forward, inverse)
