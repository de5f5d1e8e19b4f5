"""Holomorphic six-dimensional chart adapted to the symplectic-leaf
reduction: two Casimir-level coordinates sit last, so the transversal
deformation frames are constant.

Coordinate order: ``(x1, x2, y1, y2, F1, F4)``.
"""

from __future__ import annotations

from ..charts import (BivectorField, Chart, ChartMap, OperatorField,
                      ScalarField, VectorField, _grad_scalar)
from .body import body_chart
from .params import TopParams

X1C, X2C, Y1C, Y2C, F1C, F4C = range(6)

_COORDS = ("x1", "x2", "y1", "y2", "F1", "F4")


def _delta(c):
    def fn(x):
        return x[X1C] ** 2 + (c - 1.0) * x[F1C] * x[X1C] + x[X2C]
    return fn


def _discriminant(x):
    return x[X1C] ** 2 + 4.0 * x[X2C]


def complex_chart(params: TopParams) -> Chart:
    """Singular where the leaf degenerates (``x2 = 0``), where the solved
    operator entries blow up, and on the eigenvalue branch cut."""
    return Chart("complex", 6, _COORDS,
                 singular=(lambda x: x[X2C], _delta(params.c), _discriminant))


def body_to_complex(params: TopParams) -> ChartMap:
    c = params.c
    i = 1j

    def forward(m):
        w1, w2, w3, g1, g2, g3 = m
        return [-c * w3 + i * w2,
                g3 - i * g2,
                w1,
                -g1,
                w3,
                g1 ** 2 + g2 ** 2 + g3 ** 2]

    def inverse(x):
        x1, x2, y1, y2, f1, f4 = x
        g = (f4 - y2 ** 2) / x2
        return [y1,
                -i * (x1 + c * f1),
                f1,
                -y2,
                (i * 0.5) * (x2 - g),
                0.5 * (x2 + g)]

    return ChartMap(body_chart(), complex_chart(params), forward, inverse)


def complex_integrals(params: TopParams):
    """Second and third integrals written directly in the adapted chart
    (the first and fourth are coordinates here)."""
    c = params.c
    chart = complex_chart(params)

    def f2_fn(x):
        x1, x2, y1, y2, f1, f4 = x
        g = (f4 - y2 ** 2) / x2
        return 0.5 * (y1 ** 2 - (x1 + c * f1) ** 2 + c * f1 ** 2) \
            - 0.5 * (x2 + g)

    def f3_fn(x):
        x1, x2, y1, y2, f1, f4 = x
        g = (f4 - y2 ** 2) / x2
        return -y1 * y2 - 0.5 * (x1 + c * f1) * (g - x2) \
            + 0.5 * c * f1 * (x2 + g)

    return (ScalarField(chart, f2_fn), ScalarField(chart, f3_fn))


def _p1_block(x):
    i = 1j
    x2 = x[X2C]
    return [[0.0, 0.0, -i, 0.0],
            [0.0, 0.0, 0.0, -i * x2],
            [i, 0.0, 0.0, 0.0],
            [0.0, i * x2, 0.0, 0.0]]


def p1_complex(params: TopParams) -> BivectorField:
    chart = complex_chart(params)

    def fn(x):
        blk = _p1_block(x)
        out = [[0.0] * 6 for _ in range(6)]
        for a in range(4):
            for b in range(4):
                out[a][b] = blk[a][b]
        return out

    return BivectorField(chart, fn)


def _p0_block(x):
    i = 1j
    x1 = x[X1C]
    return [[0.0, 0.0, 0.0, -i],
            [0.0, 0.0, -i, i * x1],
            [0.0, i, 0.0, 0.0],
            [i, -i * x1, 0.0, 0.0]]


def x_fields_complex(params: TopParams):
    """The ladder fields expressed in the adapted chart: images of the
    integral gradients under the leaf-tangent Poisson block."""
    chart = complex_chart(params)
    F2c, F3c = complex_integrals(params)

    def x1_fn(x):
        df = _grad_scalar(F3c, x)
        blk = _p1_block(x)
        out = [-sum(blk[a][b] * df[b] for b in range(4)) for a in range(4)]
        return out + [0.0, 0.0]

    def x2_fn(x):
        df = _grad_scalar(F2c, x)
        blk = _p1_block(x)
        out = [sum(blk[a][b] * df[b] for b in range(4)) for a in range(4)]
        return out + [0.0, 0.0]

    return VectorField(chart, x1_fn), VectorField(chart, x2_fn)


def p0_complex(params: TopParams) -> BivectorField:
    """Second Poisson bivector in the adapted chart: leaf block plus the
    transversal column carrying twice the first ladder field."""
    chart = complex_chart(params)
    X1f, _ = x_fields_complex(params)

    def fn(x):
        blk = _p0_block(x)
        xv = X1f.fn(x)
        out = [[0.0] * 6 for _ in range(6)]
        for a in range(4):
            for b in range(4):
                out[a][b] = blk[a][b]
        for a in range(5):
            out[a][F4C] = 2.0 * xv[a]
            out[F4C][a] = -2.0 * xv[a]
        return out

    return BivectorField(chart, fn)


def deformation(params: TopParams):
    """Transversal frames normalized against the Casimir ladder heads, and
    the deformed bivector whose transversal rows and columns vanish."""
    from ..charts import constant_vector, wedge, add_fields, scale_field
    chart = complex_chart(params)
    Z1 = constant_vector(chart, [0.0, 0.0, 0.0, 0.0, 1.0, 0.0])
    Z2 = constant_vector(chart, [0.0, 0.0, 0.0, 0.0, 0.0, 2.0])
    X1f, _ = x_fields_complex(params)
    Q = add_fields(p0_complex(params),
                   scale_field(-1.0, wedge(X1f, Z2)))
    return Z1, Z2, Q


def nijenhuis_operator(params: TopParams) -> OperatorField:
    """The torsion-free recursion operator: leaf block equal to the ratio of
    the two leaf Poisson blocks, transversal block solved in closed form."""
    c = params.c
    chart = complex_chart(params)

    def fn(x):
        x1, x2, y1, y2, f1, f4 = x
        delta = x1 ** 2 + (c - 1.0) * f1 * x1 + x2
        out = [[0.0] * 6 for _ in range(6)]
        # leaf block: two identical 2x2 companion blocks
        out[0][1] = 1.0 / x2
        out[1][0] = 1.0
        out[1][1] = -x1 / x2
        out[2][3] = 1.0 / x2
        out[3][2] = 1.0
        out[3][3] = -x1 / x2
        # transversal block
        out[4][4] = ((c - 1.0) * f1 + x1) / delta
        out[4][5] = 1.0 / (2.0 * c * x2 * delta)
        out[5][4] = -2.0 * c * x2 * ((c - 1.0) * (f1 ** 2 + f1 * x1) - x2) \
            / delta
        out[5][5] = -(x1 ** 3 + (c - 1.0) * f1 * x1 ** 2 + 2.0 * x1 * x2
                      + (c - 1.0) * f1 * x2) / (x2 * delta)
        return out

    return OperatorField(chart, fn)


def benenti_operators(params: TopParams, N: OperatorField | None = None):
    """Triangular relations expressing the operator family through the
    minimal-polynomial coefficients of the cyclic generator."""
    from ..charts import identity_operator, operator_polynomial
    chart = complex_chart(params)
    if N is None:
        N = nijenhuis_operator(params)
    z2_mf3 = ScalarField(chart, lambda x: x[X1C] / x[X2C])
    z2_f2 = ScalarField(chart, lambda x: -1.0 / x[X2C])
    K1 = identity_operator(chart)
    K2 = operator_polynomial(N, [z2_mf3, 1.0])
    K3 = operator_polynomial(N, [z2_f2, z2_mf3, 1.0])
    return K1, K2, K3
