"""Physical parameters of the heavy symmetric top."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class TopParams:
    """Inertia ratio ``c`` (symmetry axis over equatorial), equatorial
    moment ``A``, and the unit normalization of the torque scale.

    ``c = 1`` is the degenerate spherically-symmetric case; generic runs
    keep ``c != 1``.
    """

    c: float = 2.0
    A: float = 1.0
    normalized: bool = True  # torque scale mu*g*a fixed to A

    def __post_init__(self):
        if self.c <= 0:
            raise ValueError("inertia ratio must be positive")
        if self.A <= 0:
            raise ValueError("equatorial inertia moment must be positive")
