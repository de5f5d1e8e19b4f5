"""Euler-angle chart: Hamiltonian and the diagonal operator family whose
transposes map the energy gradient onto the gradients of the classical
integrals."""

from __future__ import annotations

from ..charts import Chart, OperatorField, ScalarField
from ..jets import cos_, sin_
from .params import TopParams

# coordinate order: (phi, theta, psi, p_phi, p_theta, p_psi)
PHI, THETA, PSI, P_PHI, P_THETA, P_PSI = range(6)

_EULER_COORDS = ("phi", "theta", "psi", "p_phi", "p_theta", "p_psi")


def _sin_theta(x):
    return sin_(x[THETA])


def _cos_theta(x):
    return cos_(x[THETA])


def _momentum_gap(x):
    return x[P_PHI] - x[P_PSI] * cos_(x[THETA])


def euler_chart() -> Chart:
    return Chart("euler", 6, _EULER_COORDS,
                 singular=(_sin_theta, _cos_theta, _momentum_gap))


def euler_hamiltonian(params: TopParams) -> ScalarField:
    A, c = params.A, params.c

    def fn(x):
        s = sin_(x[THETA])
        gap = x[P_PHI] - x[P_PSI] * cos_(x[THETA])
        kinetic = (x[P_THETA] ** 2 + gap * gap / (s * s)
                   + x[P_PSI] ** 2 / c) / (2.0 * A)
        return kinetic + A * cos_(x[THETA])

    return ScalarField(euler_chart(), fn)


def euler_chain_operators(params: TopParams):
    """The identity plus the two diagonal operators acting on the
    ``(phi, p_phi)`` and ``(theta, p_theta)`` blocks."""
    A = params.A
    chart = euler_chart()

    def diag(entries_fn):
        def fn(x):
            d = entries_fn(x)
            return [[d[i] if i == j else 0.0 for j in range(6)]
                    for i in range(6)]
        return OperatorField(chart, fn)

    def k2_entries(x):
        s = sin_(x[THETA])
        f = A * s * s / (x[P_PHI] - x[P_PSI] * cos_(x[THETA]))
        return [f, 0.0, 0.0, f, 0.0, 0.0]

    def k3_entries(x):
        s = sin_(x[THETA])
        ct = cos_(x[THETA])
        f = -A * s * s / (ct * (x[P_PHI] - x[P_PSI] * ct))
        return [0.0, f, 0.0, 0.0, f, 0.0]

    k1 = diag(lambda x: [1.0] * 6)
    return k1, diag(k2_entries), diag(k3_entries)
