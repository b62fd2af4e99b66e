"""Test corpus: convex functions, midpoint-symmetric weights, checks.

A FunctionSpec bundles a scalar function with its exact derivative
(when one exists everywhere on the interval) and a certification of
how convex it is.  Certification is a ladder:

* ANALYTIC_DERIV_CONVEX: f is convex and |f'|^q is convex for every
  q >= deriv_convex_from, both shown analytically (the one-line proofs
  sit next to each corpus entry);
* ANALYTIC_CONVEX: f is convex analytically, but no claim about |f'|;
* UNVERIFIED: no certification, verifiers fall back to sampling.

WeightSpec carries a weight tied to an interval plus two validated
flags, nonnegativity and symmetry about the midpoint.  Both corpora
are deterministic for a fixed seed, including their randomized
entries.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional

from .numerics import DomainError

__all__ = [
    "ConvexityKind",
    "ConvexityReport",
    "FunctionSpec",
    "WeightSpec",
    "HolderPair",
    "builtin_function_corpus",
    "builtin_weight_corpus",
    "make_weight",
    "symmetrize",
    "check_convexity",
    "check_deriv_power_convexity",
    "sup_norm",
]

DEFAULT_CORPUS_SEED = 271828
SYMMETRY_GRID = 1001
SYMMETRY_TOL = 1e-12
CONVEXITY_SLACK = 1e-10
SUP_NORM_GRID = 4097


class ConvexityKind(Enum):
    ANALYTIC_DERIV_CONVEX = "analytic-deriv-convex"
    ANALYTIC_CONVEX = "analytic-convex"
    UNVERIFIED = "unverified"


@dataclass(frozen=True)
class FunctionSpec:
    """A scalar function on [a, b] with derivative and certification."""

    label: str
    fn: Callable[[float], float] = field(repr=False)
    deriv: Optional[Callable[[float], float]] = field(repr=False, default=None)
    convexity_kind: ConvexityKind = ConvexityKind.UNVERIFIED
    a: float = 0.0
    b: float = 1.0
    # |f'|^q is certified convex for all q >= deriv_convex_from; only
    # meaningful when convexity_kind is ANALYTIC_DERIV_CONVEX.
    deriv_convex_from: float = 1.0

    def __call__(self, x: float) -> float:
        return self.fn(x)

    @property
    def certified_convex(self) -> bool:
        return self.convexity_kind is not ConvexityKind.UNVERIFIED

    def admits_deriv_power(self, q: float) -> bool:
        """Whether |f'|^q is certified convex for this exponent."""
        return (self.deriv is not None
                and self.convexity_kind is ConvexityKind.ANALYTIC_DERIV_CONVEX
                and q >= self.deriv_convex_from)


@dataclass(frozen=True)
class WeightSpec:
    """A weight function tied to an interval, with validated flags."""

    label: str
    fn: Callable[[float], float] = field(repr=False)
    a: float = 0.0
    b: float = 1.0
    nonnegative: bool = False
    symmetric: bool = False

    def __call__(self, x: float) -> float:
        return self.fn(x)


@dataclass(frozen=True)
class HolderPair:
    """Conjugate exponents with 1/p + 1/q = 1, both finite and > 1."""

    p: float
    q: float

    def __post_init__(self):
        if not (self.p > 1 and self.q > 1):
            raise DomainError(f"need p, q > 1, got p={self.p!r}, q={self.q!r}")
        if abs(1.0 / self.p + 1.0 / self.q - 1.0) > 1e-12:
            raise DomainError(
                f"p={self.p!r} and q={self.q!r} are not conjugate")

    @classmethod
    def from_q(cls, q: float) -> "HolderPair":
        if not (q > 1):
            raise DomainError(f"need q > 1, got {q!r}")
        return cls(q / (q - 1.0), q)


@dataclass(frozen=True)
class ConvexityReport:
    convex: bool
    worst_violation: float
    samples: int
    seed: int


def _grid(a: float, b: float, n: int) -> list[float]:
    step = (b - a) / (n - 1)
    pts = [a + i * step for i in range(n)]
    pts[-1] = b
    return pts


def make_weight(label: str, fn: Callable[[float], float], a: float,
                b: float) -> WeightSpec:
    """Wrap a raw weight, validating its flags on a dense grid.

    Symmetry about (a+b)/2 is checked at 1001 points to 1e-12 (scaled
    by the grid magnitude), nonnegativity to the same slack.  Failing
    a check does not raise; it just leaves the flag False, and the
    verifiers that need the property will refuse the weight.
    """
    if not (math.isfinite(a) and math.isfinite(b) and a < b):
        raise DomainError(f"need finite a < b, got [{a!r}, {b!r}]")
    pts = _grid(a, b, SYMMETRY_GRID)
    vals = [fn(x) for x in pts]
    for x, v in zip(pts, vals):
        if not math.isfinite(v):
            raise DomainError(f"weight {label!r} is not finite at x = {x!r}")
    scale = max(1.0, max(abs(v) for v in vals))
    symmetric = all(abs(v - fn(a + b - x)) <= SYMMETRY_TOL * scale
                    for x, v in zip(pts, vals))
    nonnegative = min(vals) >= -SYMMETRY_TOL * scale
    return WeightSpec(label, fn, a, b, nonnegative, symmetric)


def symmetrize(g_raw: Callable[[float], float], a: float, b: float,
               label: str = "symmetrized") -> WeightSpec:
    """Even part of g_raw about the midpoint: (g(x) + g(a+b-x)) / 2."""
    fn = lambda x: 0.5 * (g_raw(x) + g_raw(a + b - x))
    return make_weight(label, fn, a, b)


def check_convexity(f: Callable[[float], float], a: float, b: float,
                    samples: int = 2000,
                    seed: int = DEFAULT_CORPUS_SEED) -> ConvexityReport:
    """Randomized convexity test on [a, b].

    Draws triples (x, y, lam) and evaluates
    f(lam*x + (1-lam)*y) - lam*f(x) - (1-lam)*f(y), which is <= 0 for
    convex f.  The worst (largest) value is reported; the function is
    considered refuted when it exceeds 1e-10 times the sampled scale.
    A sampling test can refute convexity but never prove it.
    """
    if samples < 1:
        raise DomainError(f"need at least one sample, got {samples}")
    rng = random.Random(seed)
    worst = -math.inf
    scale = 1.0
    for _ in range(samples):
        x = rng.uniform(a, b)
        y = rng.uniform(a, b)
        lam = rng.random()
        fx, fy = f(x), f(y)
        gap = f(lam * x + (1.0 - lam) * y) - lam * fx - (1.0 - lam) * fy
        worst = max(worst, gap)
        scale = max(scale, abs(fx), abs(fy))
    return ConvexityReport(worst <= CONVEXITY_SLACK * scale, worst,
                           samples, seed)


def check_deriv_power_convexity(f: FunctionSpec, q: float,
                                samples: int = 2000,
                                seed: int = DEFAULT_CORPUS_SEED) -> ConvexityReport:
    """Sampling diagnostic for convexity of |f'|^q.

    Secondary to the analytic certifications carried by the corpus;
    useful when probing functions labeled UNVERIFIED.
    """
    if f.deriv is None:
        raise DomainError(f"function {f.label!r} has no derivative")
    if not (q >= 1):
        raise DomainError(f"need q >= 1, got {q!r}")
    d = f.deriv
    return check_convexity(lambda x: abs(d(x)) ** q, f.a, f.b, samples, seed)


def sup_norm(g: Callable[[float], float], a: float, b: float,
             grid: int = SUP_NORM_GRID, refine_rounds: int = 4) -> float:
    """Supremum of |g| on [a, b] by dense sampling plus local zoom.

    The coarse grid locates the maximizer to one cell; each refinement
    round re-samples 33 points inside the bracketing cells.  For the
    builtin corpus (smooth or piecewise linear weights) the result is
    accurate to well under 1e-9 relative.
    """
    if grid < SUP_NORM_GRID:
        raise DomainError(f"grid must have at least {SUP_NORM_GRID} points")
    pts = _grid(a, b, grid)
    vals = [abs(g(x)) for x in pts]
    best = max(range(grid), key=vals.__getitem__)
    best_val = vals[best]
    lo = pts[max(best - 1, 0)]
    hi = pts[min(best + 1, grid - 1)]
    for _ in range(refine_rounds):
        pts = _grid(lo, hi, 33)
        vals = [abs(g(x)) for x in pts]
        best = max(range(33), key=vals.__getitem__)
        best_val = max(best_val, vals[best])
        lo = pts[max(best - 1, 0)]
        hi = pts[min(best + 1, 32)]
    return best_val


def _assert_finite_on(fn: Callable[[float], float], label: str, a: float,
                      b: float) -> None:
    for x in _grid(a, b, 33):
        if not math.isfinite(fn(x)):
            raise DomainError(f"corpus entry {label!r} not finite at {x!r}")


def builtin_function_corpus(a: float, b: float,
                            seed: int = DEFAULT_CORPUS_SEED) -> list[FunctionSpec]:
    """Deterministic corpus of convex functions on [a, b].

    Always contains eight entries; two more (using logarithms) join on
    strictly positive intervals.  Entries whose derivative has a kink
    carry deriv=None and so are skipped by derivative-based verifiers.
    """
    if not (math.isfinite(a) and math.isfinite(b) and a < b):
        raise DomainError(f"need finite a < b, got [{a!r}, {b!r}]")
    m = 0.5 * (a + b)
    rng = random.Random(seed)
    # random positive quadratic: minimum value bounded away from zero
    c2 = rng.uniform(0.5, 2.0)
    c1 = rng.uniform(-1.0, 1.0)
    c0 = c1 * c1 / (4.0 * c2) + rng.uniform(0.1, 1.0)

    K = ConvexityKind
    entries = [
        # |2x|^q = 2^q |x|^q, convex for every q >= 1
        FunctionSpec("sq", lambda x: x * x, lambda x: 2.0 * x,
                     K.ANALYTIC_DERIV_CONVEX, a, b),
        # |exp'|^q = e^(qx), convex
        FunctionSpec("exp", math.exp, math.exp,
                     K.ANALYTIC_DERIV_CONVEX, a, b),
        # e^(-qx) is convex
        FunctionSpec("exp-neg", lambda x: math.exp(-x),
                     lambda x: -math.exp(-x), K.ANALYTIC_DERIV_CONVEX, a, b),
        # |4u^3|^q = 4^q |u|^(3q) with 3q >= 3
        FunctionSpec("quart", lambda x: (x - m) ** 4,
                     lambda x: 4.0 * (x - m) ** 3,
                     K.ANALYTIC_DERIV_CONVEX, a, b),
        # |sinh| is convex (even, increasing on [0, inf)), powers stay convex
        FunctionSpec("cosh", math.cosh, math.sinh,
                     K.ANALYTIC_DERIV_CONVEX, a, b),
        # kink at the midpoint: convex but no derivative there
        FunctionSpec("abs", lambda x: abs(x - m), None,
                     K.ANALYTIC_CONVEX, a, b),
        # piecewise linear, max of two affine pieces, kink at the midpoint
        FunctionSpec("plin", lambda x: max(m - x, 2.0 * (x - m)), None,
                     K.ANALYTIC_CONVEX, a, b),
        # |2 c2 u + c1|^q, power of |affine|, convex
        FunctionSpec("quad-rand",
                     lambda x: c2 * (x - m) ** 2 + c1 * (x - m) + c0,
                     lambda x: 2.0 * c2 * (x - m) + c1,
                     K.ANALYTIC_DERIV_CONVEX, a, b),
    ]
    if a > 0:
        # x^(-q) is convex on x > 0
        entries.append(FunctionSpec("neg-log", lambda x: -math.log(x),
                                    lambda x: -1.0 / x,
                                    K.ANALYTIC_DERIV_CONVEX, a, b))
        # x log x is convex on x > 0; |log x + 1| is convex only left of
        # 1/e (where it equals -log x - 1), so the derivative
        # certification is interval dependent.
        xlogx_kind = (K.ANALYTIC_DERIV_CONVEX if b <= 1.0 / math.e
                      else K.ANALYTIC_CONVEX)
        entries.append(FunctionSpec("xlogx", lambda x: x * math.log(x),
                                    lambda x: math.log(x) + 1.0,
                                    xlogx_kind, a, b))
    for spec in entries:
        _assert_finite_on(spec.fn, spec.label, a, b)
    return entries


def builtin_weight_corpus(a: float, b: float,
                          seed: int = DEFAULT_CORPUS_SEED) -> list[WeightSpec]:
    """Deterministic corpus of nonnegative midpoint-symmetric weights."""
    if not (math.isfinite(a) and math.isfinite(b) and a < b):
        raise DomainError(f"need finite a < b, got [{a!r}, {b!r}]")
    m = 0.5 * (a + b)
    w = b - a
    rng = random.Random(seed)
    coeffs = [rng.uniform(-1.0, 1.0) for _ in range(5)]

    def raw_poly(x: float) -> float:
        xi = (x - m) / w
        acc = 0.0
        for c in reversed(coeffs):
            acc = acc * xi + c
        return acc

    # even part squared, shifted to stay strictly positive
    def poly_rand(x: float) -> float:
        return (0.5 * (raw_poly(x) + raw_poly(a + b - x))) ** 2 + 0.1

    lam = 8.0 / (w * w)
    specs = [
        make_weight("one", lambda x: 1.0, a, b),
        make_weight("parabolic", lambda x: (x - a) * (b - x), a, b),
        make_weight("vee", lambda x: abs(x - m), a, b),
        make_weight("bump", lambda x: math.exp(-lam * (x - m) ** 2), a, b),
        make_weight("cos-arch", lambda x: math.cos(math.pi * (x - m) / w), a, b),
        make_weight("poly-rand", poly_rand, a, b),
    ]
    bad = [s.label for s in specs if not (s.nonnegative and s.symmetric)]
    if bad:
        raise DomainError(f"builtin weights failed validation: {bad}")
    return specs
