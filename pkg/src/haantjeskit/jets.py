"""First-order forward-mode scalars over complex arithmetic.

A :class:`Jet` carries a value together with its gradient with respect to a
fixed tuple of independent variables.  Both the value and the gradient slots
may themselves be jets, so nested differentiation (derivatives of quantities
that already contain derivatives) works without any special casing.

For rational component functions the derivatives are exact up to rounding;
transcendental entries (``sin``/``cos``/``sqrt``) use the chain rule on top
of :mod:`cmath`.
"""

from __future__ import annotations

import cmath


class Jet:
    __slots__ = ("val", "grad")

    def __init__(self, val, grad):
        self.val = val
        self.grad = tuple(grad)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Jet):
            return Jet(self.val + other.val,
                       tuple(a + b for a, b in zip(self.grad, other.grad)))
        return Jet(self.val + other, self.grad)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Jet):
            return Jet(self.val - other.val,
                       tuple(a - b for a, b in zip(self.grad, other.grad)))
        return Jet(self.val - other, self.grad)

    def __rsub__(self, other):
        return Jet(other - self.val, tuple(-a for a in self.grad))

    def __neg__(self):
        return Jet(-self.val, tuple(-a for a in self.grad))

    def __mul__(self, other):
        if isinstance(other, Jet):
            return Jet(self.val * other.val,
                       tuple(a * other.val + self.val * b
                             for a, b in zip(self.grad, other.grad)))
        return Jet(self.val * other, tuple(a * other for a in self.grad))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Jet):
            q = self.val / other.val
            return Jet(q, tuple((a - q * b) / other.val
                                for a, b in zip(self.grad, other.grad)))
        return Jet(self.val / other, tuple(a / other for a in self.grad))

    def __rtruediv__(self, other):
        q = other / self.val
        return Jet(q, tuple(-q * a / self.val for a in self.grad))

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise TypeError("jets support non-negative integer powers only")
        if n == 0:
            return Jet(1.0 + 0.0j, tuple(0.0 for _ in self.grad))
        d = n * self.val ** (n - 1)
        return Jet(self.val ** n, tuple(d * a for a in self.grad))

    def __repr__(self):
        return f"Jet({self.val!r}, grad={self.grad!r})"


# -- generic transcendental helpers ----------------------------------------

def sqrt_(x):
    if isinstance(x, Jet):
        s = sqrt_(x.val)
        return Jet(s, tuple(a / (2.0 * s) for a in x.grad))
    return cmath.sqrt(x)


def sin_(x):
    if isinstance(x, Jet):
        c = cos_(x.val)
        return Jet(sin_(x.val), tuple(c * a for a in x.grad))
    return cmath.sin(x)


def cos_(x):
    if isinstance(x, Jet):
        s = sin_(x.val)
        return Jet(cos_(x.val), tuple(-s * a for a in x.grad))
    return cmath.cos(x)


# -- seeding / extraction ---------------------------------------------------

def seed(values):
    """Wrap a coordinate tuple so that evaluating a function of the result
    yields the function value and all first partials in one pass."""
    n = len(values)
    return [Jet(v, tuple(1.0 if j == i else 0.0 for j in range(n)))
            for i, v in enumerate(values)]


def value(v):
    return v.val if isinstance(v, Jet) else v


def gradient(v, n):
    if isinstance(v, Jet):
        return list(v.grad)
    return [0.0] * n
