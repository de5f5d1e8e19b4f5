"""Poisson bivectors, brackets, compatibility with operator algebras, Lie
derivatives and chain construction.

Chain failures are data: a chain that does not close is returned with its
residuals, never raised as an exception, because adjudicating identities is
the whole point of the toolkit.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .charts import (BivectorField, OneFormField, OperatorField, Point,
                     ScalarField, VectorField, _eval_matrix, _eval_vector,
                     _grad_scalar, _same_chart, apply_operator,
                     apply_transpose, exterior_derivative, lie_bracket)
from .torsion import SampledResidual

__all__ = [
    "PoissonStructure", "MagriChain",
    "jacobi_residual", "verify_poisson", "poisson_bracket",
    "hamiltonian_field", "check_compatibility", "check_skew_compositions",
    "lie_derivative_operator", "lie_derivative_oneform",
    "lie_derivative_bivector", "r_tensor",
    "build_chain_oneforms", "build_chain_vectorfields",
]


@dataclass(frozen=True)
class PoissonStructure:
    P: BivectorField
    skew: SampledResidual
    jacobi: SampledResidual

    @property
    def verified(self) -> bool:
        return self.skew.passed and self.jacobi.passed


def jacobi_residual(P: BivectorField, p: Point) -> float:
    """Max over index triples of the cyclic Schouten sum."""
    Pc = P(p)
    Pd = P.jacobian(p)  # [i, j, l] = d_l P^{ij}
    term = np.einsum("il,jkl->ijk", Pc, Pd)
    total = term + term.transpose(1, 2, 0) + term.transpose(2, 0, 1)
    return float(np.max(np.abs(total)))


def verify_poisson(P: BivectorField, sample, tol_exact: float = 1e-12,
                   tol_deriv: float = 1e-9) -> PoissonStructure:
    if not sample:
        raise ValueError("empty sample")
    skew = max(P.skew_residual(p) for p in sample)
    jac = max(jacobi_residual(P, p) for p in sample)
    m = max(float(np.max(np.abs(P(p)))) for p in sample)
    d = max(float(np.max(np.abs(P.jacobian(p)))) for p in sample)
    return PoissonStructure(
        P,
        skew=SampledResidual(skew, tol_exact, 1.0 + m, len(sample)),
        jacobi=SampledResidual(jac, tol_deriv, (1.0 + m) * (1.0 + d),
                               len(sample)))


def poisson_bracket(P: BivectorField, f: ScalarField, g: ScalarField,
                    p: Point) -> complex:
    """``<df, P dg>`` at ``p``."""
    _same_chart(P.chart, f.chart)
    _same_chart(P.chart, g.chart)
    df = f.gradient(p)
    dg = g.gradient(p)
    return complex(df @ P(p) @ dg)


def hamiltonian_field(P: BivectorField, f: ScalarField) -> VectorField:
    """``P df`` as a differentiable vector field."""
    _same_chart(P.chart, f.chart)

    def fn(x):
        m = _eval_matrix(P, x)
        df = _grad_scalar(f, x)
        n = len(x)
        return [sum(m[i][j] * df[j] for j in range(n)) for i in range(n)]

    return VectorField(P.chart, fn)


def check_compatibility(K: OperatorField, P: BivectorField, sample,
                        tol: float = 1e-12) -> SampledResidual:
    """Residual of ``K P = P K^T`` over the sample."""
    if not sample:
        raise ValueError("empty sample")
    res, scale = 0.0, 1.0
    for p in sample:
        k, m = K(p), P(p)
        res = max(res, float(np.max(np.abs(k @ m - m @ k.T))))
        scale = max(scale, (1.0 + float(np.max(np.abs(k))))
                    * (1.0 + float(np.max(np.abs(m)))))
    return SampledResidual(res, tol, scale, len(sample))


def check_skew_compositions(Ki: OperatorField, Kj: OperatorField,
                            P: BivectorField, f: ScalarField, r: int,
                            sample, tol: float = 1e-12) -> dict:
    """Skew residuals of ``Ki P``, ``Ki P Kj^T`` and ``(Ki - f I)^s P`` for
    ``s = 1..r``."""
    if not sample:
        raise ValueError("empty sample")
    n = Ki.chart.dim
    out = {"KiP": 0.0, "KiPKjT": 0.0}
    for s in range(1, r + 1):
        out[f"(Ki-fI)^{s}P"] = 0.0
    scale = 1.0
    for p in sample:
        ki, kj, m = Ki(p), Kj(p), P(p)
        fv = complex(f(p))
        skew = lambda a: float(np.max(np.abs(a + a.T)))
        out["KiP"] = max(out["KiP"], skew(ki @ m))
        out["KiPKjT"] = max(out["KiPKjT"], skew(ki @ m @ kj.T))
        shifted = ki - fv * np.eye(n)
        power = np.eye(n, dtype=complex)
        for s in range(1, r + 1):
            power = power @ shifted
            out[f"(Ki-fI)^{s}P"] = max(out[f"(Ki-fI)^{s}P"],
                                       skew(power @ m))
        mag = max(float(np.max(np.abs(a))) for a in (ki, kj, m))
        scale = max(scale, (1.0 + mag) ** (r + 2))
    return {name: SampledResidual(v, tol, scale, len(sample))
            for name, v in out.items()}


# -- Lie derivatives (pointwise) -------------------------------------------

def lie_derivative_operator(Z: VectorField, N: OperatorField,
                            p: Point) -> np.ndarray:
    """``(L_Z N)^i_j = Z^k d_k N^i_j - N^k_j d_k Z^i + N^i_k d_j Z^k``."""
    Zc = Z(p)
    Zd = Z.jacobian(p)
    Nc = N(p)
    Nd = N.jacobian(p)
    return (np.einsum("k,ijk->ij", Zc, Nd)
            - np.einsum("kj,ik->ij", Nc, Zd)
            + np.einsum("ik,kj->ij", Nc, Zd))


def lie_derivative_oneform(Y: VectorField, alpha: OneFormField,
                           p: Point) -> np.ndarray:
    """Cartan formula in components:
    ``(L_Y a)_i = Y^k d_k a_i + a_k d_i Y^k``."""
    Yc = Y(p)
    Yd = Y.jacobian(p)
    Ac = alpha(p)
    Ad = alpha.jacobian(p)
    return np.einsum("k,ik->i", Yc, Ad) + np.einsum("k,ki->i", Ac, Yd)


def lie_derivative_bivector(Z: VectorField, P: BivectorField,
                            p: Point) -> np.ndarray:
    """``(L_Z P)^{ij} = Z^k d_k P^{ij} - P^{kj} d_k Z^i - P^{ik} d_k Z^j``."""
    Zc = Z(p)
    Zd = Z.jacobian(p)
    Pc = P(p)
    Pd = P.jacobian(p)
    return (np.einsum("k,ijk->ij", Zc, Pd)
            - np.einsum("kj,ik->ij", Pc, Zd)
            - np.einsum("ik,jk->ij", Pc, Zd))


def r_tensor(P: BivectorField, N: OperatorField, alpha: OneFormField,
             Y: VectorField, p: Point) -> np.ndarray:
    """Compatibility tensor of a bivector and an operator applied to a
    one-form and a vector:
    ``L_{P a}(N) Y - P (L_Y (N^T a) - L_{N Y} a)``."""
    for f in (N, alpha, Y):
        _same_chart(P.chart, f.chart)
    Pa = hamiltonian_like(P, alpha)
    NY = apply_operator(N, Y)
    NTa = apply_transpose(N, alpha)
    first = lie_derivative_operator(Pa, N, p) @ Y(p)
    inner = lie_derivative_oneform(Y, NTa, p) - lie_derivative_oneform(NY, alpha, p)
    return first - P(p) @ inner


def hamiltonian_like(P: BivectorField, alpha: OneFormField) -> VectorField:
    """``P alpha`` for an arbitrary one-form (not necessarily exact)."""
    _same_chart(P.chart, alpha.chart)

    def fn(x):
        m = _eval_matrix(P, x)
        a = _eval_vector(alpha, x)
        n = len(x)
        return [sum(m[i][j] * a[j] for j in range(n)) for i in range(n)]

    return VectorField(P.chart, fn)


# -- Magri chains -----------------------------------------------------------

@dataclass
class MagriChain:
    """Elements produced by pushing one seed field through an operator
    family, with the residuals that decide whether the chain closes."""

    kind: str  # "one-forms" | "vector-fields"
    elements: list
    residuals: list = field(default_factory=list)
    ok: bool = True


def build_chain_oneforms(generators, H: ScalarField, sample,
                         tol: float = 1e-9) -> MagriChain:
    """Elements ``K_i^T dH`` with pointwise-closedness residuals."""
    if not sample:
        raise ValueError("empty sample")
    from .charts import differential
    dH = differential(H)
    chain = MagriChain("one-forms", [])
    for K in generators:
        el = apply_transpose(K, dH)
        res, scale = 0.0, 1.0
        for p in sample:
            res = max(res, float(np.max(np.abs(exterior_derivative(el, p)))))
            scale = max(scale, 1.0 + float(np.max(np.abs(el.jacobian(p)))))
        chain.elements.append(el)
        chain.residuals.append(SampledResidual(res, tol, scale, len(sample)))
    chain.ok = all(r.passed for r in chain.residuals)
    return chain


def build_chain_vectorfields(generators, Y: VectorField, sample,
                             tol: float = 1e-9) -> MagriChain:
    """Elements ``K_i Y`` with pairwise-commutation residuals."""
    if not sample:
        raise ValueError("empty sample")
    elements = [apply_operator(K, Y) for K in generators]
    chain = MagriChain("vector-fields", elements)
    for i, a in enumerate(elements):
        for b in elements[i + 1:]:
            br = lie_bracket(a, b)
            res, scale = 0.0, 1.0
            for p in sample:
                res = max(res, float(np.max(np.abs(br(p)))))
                scale = max(scale,
                            (1.0 + float(np.max(np.abs(a(p)))))
                            * (1.0 + float(np.max(np.abs(b.jacobian(p))))))
            chain.residuals.append(SampledResidual(res, tol, scale,
                                                   len(sample)))
    chain.ok = all(r.passed for r in chain.residuals)
    return chain
