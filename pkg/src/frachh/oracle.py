"""Slow, independent reference computations.

These exist so the main quadrature paths can be cross-checked by code
that shares nothing with them: a brute-force composite midpoint rule,
a closed-form Beta-function evaluation for monomials, and a central
finite difference.  They trade speed for transparency and are meant
for tests and diagnostics, not for production evaluation.
"""

from __future__ import annotations

import math
from typing import Callable

from .numerics import DomainError, KernelSide, gamma

__all__ = [
    "dense_singular_integral",
    "beta_reference",
    "finite_difference_derivative",
]


def dense_singular_integral(h: Callable[[float], float], a: float, b: float,
                            alpha: float, side: KernelSide,
                            panels: int = 100_000) -> float:
    """Brute-force value of int_a^b kernel(t) * h(t) dt.

    Applies the same change of variable u = (b-t)^alpha (respectively
    (t-a)^alpha) that removes the kernel, then a plain composite
    midpoint rule with exact summation.  No error estimate is
    returned; the convergence order is min(2, 1 + 1/alpha), so 1e5
    panels give roughly 1e-10 absolute accuracy for alpha <= 1 on
    unit-scale problems and somewhat less for large alpha.
    """
    if not (math.isfinite(alpha) and alpha > 0):
        raise DomainError(f"alpha must be positive and finite, got {alpha!r}")
    if not (math.isfinite(a) and math.isfinite(b) and a < b):
        raise DomainError(f"need finite a < b, got [{a!r}, {b!r}]")
    if panels < 100_000:
        raise DomainError(f"need at least 1e5 panels, got {panels}")

    span = (b - a) ** alpha
    step = span / panels
    inv = 1.0 / alpha
    if side is KernelSide.UPPER_SINGULAR:
        def sample(j: int) -> float:
            t = b - ((j + 0.5) * step) ** inv
            return h(a if t < a else b if t > b else t)
    elif side is KernelSide.LOWER_SINGULAR:
        def sample(j: int) -> float:
            t = a + ((j + 0.5) * step) ** inv
            return h(a if t < a else b if t > b else t)
    else:
        raise DomainError(f"side must be a KernelSide, got {side!r}")
    return math.fsum(sample(j) for j in range(panels)) * step * inv


def beta_reference(alpha: float, n: int, a: float = 0.0, b: float = 1.0) -> float:
    """Closed form of the left fractional integral of (t-a)^n at b.

    (1/Gamma(alpha)) int_a^b (b-t)^(alpha-1) (t-a)^n dt
        = Gamma(n+1) / Gamma(n+1+alpha) * (b-a)^(n+alpha)

    by the Beta integral.  Restricted to small integer n where the
    formula is numerically unproblematic.
    """
    if not isinstance(n, int) or n < 0 or n > 12:
        raise DomainError(f"n must be an integer in [0, 12], got {n!r}")
    if not (math.isfinite(alpha) and alpha > 0):
        raise DomainError(f"alpha must be positive and finite, got {alpha!r}")
    if not (math.isfinite(a) and math.isfinite(b) and a < b):
        raise DomainError(f"need finite a < b, got [{a!r}, {b!r}]")
    return gamma(n + 1.0) / gamma(n + 1.0 + alpha) * (b - a) ** (n + alpha)


def finite_difference_derivative(f: Callable[[float], float], x: float,
                                 h: float = 1e-6) -> float:
    """Central difference (f(x+h) - f(x-h)) / 2h, error O(h^2)."""
    if not (h > 0):
        raise DomainError(f"step must be positive, got {h!r}")
    return (f(x + h) - f(x - h)) / (2.0 * h)
