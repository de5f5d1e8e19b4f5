"""Nijenhuis and Haantjes torsions of operator fields.

Both torsions are evaluated pointwise from the first-order local formulas;
no symbolic machinery is involved.  "Is a Nijenhuis/Haantjes operator" is
therefore a sampled statement: the result always carries the sample size,
the maximum residual and the magnitude scale the residual was compared
against.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .charts import OperatorField, Point

__all__ = [
    "TorsionValue", "SampledResidual",
    "nijenhuis_torsion", "haantjes_torsion",
    "is_nijenhuis", "is_haantjes",
]


@dataclass(frozen=True)
class TorsionValue:
    """Pointwise (1,2)-torsion; ``components[i, j, k]`` is antisymmetric in
    the last two slots."""

    point: Point
    components: np.ndarray

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.components)))

    def antisymmetry_residual(self) -> float:
        t = self.components
        return float(np.max(np.abs(t + t.transpose(0, 2, 1))))


@dataclass(frozen=True)
class SampledResidual:
    """Outcome of a sampled identity check.

    ``residual`` is the raw maximum over the sample; the identity counts as
    satisfied when ``residual <= tolerance * scale``, where ``scale`` grows
    with the magnitude of the inputs entering the identity (1 for checks on
    bounded data).
    """

    residual: float
    tolerance: float
    scale: float = 1.0
    points: int = 0

    @property
    def effective_tolerance(self) -> float:
        return self.tolerance * self.scale

    @property
    def passed(self) -> bool:
        return self.residual <= self.effective_tolerance


def _nijenhuis_components(Lc: np.ndarray, Ld: np.ndarray) -> np.ndarray:
    # Lc[i, j] operator entries, Ld[i, j, a] their a-th partials.
    t1 = np.einsum("ika,aj->ijk", Ld, Lc)
    t2 = np.einsum("ija,ak->ijk", Ld, Lc)
    t3 = np.einsum("ia,ajk->ijk", Lc, Ld - Ld.transpose(0, 2, 1))
    return t1 - t2 + t3


def nijenhuis_torsion(L: OperatorField, p: Point) -> TorsionValue:
    Lc = L(p)
    Ld = L.jacobian(p)
    return TorsionValue(p, _nijenhuis_components(Lc, Ld))


def haantjes_torsion(L: OperatorField, p: Point) -> TorsionValue:
    """Haantjes torsion; only first derivatives of ``L`` are needed because
    the Nijenhuis torsion enters algebraically."""
    Lc = L(p)
    Ld = L.jacobian(p)
    T = _nijenhuis_components(Lc, Ld)
    H = (np.einsum("ia,ab,bjk->ijk", Lc, Lc, T)
         + np.einsum("iab,aj,bk->ijk", T, Lc, Lc)
         - np.einsum("ia,abk,bj->ijk", Lc, T, Lc)
         - np.einsum("ia,ajb,bk->ijk", Lc, T, Lc))
    return TorsionValue(p, H)


def _operator_scales(L: OperatorField, sample):
    m = max(float(np.max(np.abs(L(p)))) for p in sample)
    d = max(float(np.max(np.abs(L.jacobian(p)))) for p in sample)
    return m, d


def is_nijenhuis(L: OperatorField, sample, tol: float = 1e-9) -> SampledResidual:
    """Max Nijenhuis-torsion residual over the sample, scaled by the
    magnitude of the terms of the local formula."""
    if not sample:
        raise ValueError("empty sample")
    res = max(nijenhuis_torsion(L, p).max_abs() for p in sample)
    m, d = _operator_scales(L, sample)
    scale = (1.0 + m) * (1.0 + d)
    return SampledResidual(res, tol, scale, len(sample))


def is_haantjes(L: OperatorField, sample, tol: float = 1e-9) -> SampledResidual:
    if not sample:
        raise ValueError("empty sample")
    res = max(haantjes_torsion(L, p).max_abs() for p in sample)
    m, d = _operator_scales(L, sample)
    scale = (1.0 + m) ** 3 * (1.0 + d)
    return SampledResidual(res, tol, scale, len(sample))
