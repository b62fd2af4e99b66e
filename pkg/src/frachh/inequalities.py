"""Verifiers for Hermite-Hadamard / Fejer type statements.

Each verifier recomputes both sides of one inequality or identity from
scratch and returns a small report:

* SandwichReport for three-term chains lhs <= mid <= rhs,
* BoundReport for dominance statements observed <= bound,
* IdentityReport for exact equalities checked by residual.

Statuses are three-valued.  A margin (or slack, or residual) is
compared against an error budget assembled from the quadrature error
estimates that entered the computation, scaled exactly like the
values, plus a fixed floor of 1e-12 times the report scale:

* Violated: some margin is below -budget,
* Inconclusive: no violation, but some margin sits inside the budget,
  so the sign cannot be trusted,
* Holds: every margin clears the budget.

An Inconclusive first pass automatically retries once with tolerance
tightened by 100 before the verdict is final.  Hypothesis gates
(convexity certifications, weight flags) raise DomainError unless
force=True, which instead records "hypotheses unmet" in the report
notes and proceeds; that escape hatch exists to explore what happens
to an inequality when its assumptions fail.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Callable, Optional, Union

from .fracops import FracSetting, j_left, j_right
from .functions import (ConvexityKind, FunctionSpec, HolderPair, WeightSpec,
                        check_convexity, check_deriv_power_convexity, sup_norm)
from .numerics import (DEFAULT_TOL, CumulativeKernel, DomainError, QuadResult,
                       cumulative_kernel, gamma, integrate_smooth)

__all__ = [
    "Status",
    "SandwichReport",
    "BoundReport",
    "IdentityReport",
    "AuxIntegralsReport",
    "hh_classical",
    "fejer_classical",
    "hh_fractional",
    "fejer_fractional",
    "trapezoid_identity",
    "weighted_trapezoid_identity",
    "trapezoid_bound",
    "weighted_bound_sup",
    "weighted_bound_power_mean",
    "weighted_bound_holder",
    "weighted_bound_holder_low_order",
    "aux_integrals",
    "scalar_power_lemma",
]

ERROR_FLOOR = 1e-12
# identity residuals between 1 and 10 budgets are treated as ambiguous
# rather than violations, since the budget is an estimate
GRAY_FACTOR = 10.0

_FEJER_NOTE = ("weighted mean term carries no 1/(b-a) factor; all three "
               "terms scale with the weight integral, matching the alpha=1 "
               "limit of the fractional form")


class Status(Enum):
    HOLDS = "Holds"
    VIOLATED = "Violated"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class SandwichReport:
    lhs: float
    mid: float
    rhs: float
    lower_margin: float
    upper_margin: float
    error_budget: float
    status: Status
    evaluations: int
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class BoundReport:
    observed: float
    bound: float
    slack: float
    error_budget: float
    status: Status
    evaluations: int
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class IdentityReport:
    lhs: float
    rhs: float
    residual: float
    scale: float
    error_budget: float  # relative to scale
    status: Status
    evaluations: int
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class AuxIntegralsReport:
    e_closed: float
    e_numeric: float
    f_closed: float
    f_numeric: float
    error_budget: float
    status: Status
    evaluations: int
    notes: tuple[str, ...] = ()


def _sandwich(lhs: float, mid: float, rhs: float, err: float,
              evaluations: int, notes: tuple[str, ...]) -> SandwichReport:
    lower = mid - lhs
    upper = rhs - mid
    budget = err + ERROR_FLOOR * max(abs(lhs), abs(mid), abs(rhs), 1.0)
    if lower < -budget or upper < -budget:
        status = Status.VIOLATED
    elif abs(lower) < budget or abs(upper) < budget:
        status = Status.INCONCLUSIVE
    else:
        status = Status.HOLDS
    return SandwichReport(lhs, mid, rhs, lower, upper, budget, status,
                          evaluations, notes)


def _bound(observed: float, bound: float, err: float, evaluations: int,
           notes: tuple[str, ...]) -> BoundReport:
    slack = bound - observed
    budget = err + ERROR_FLOOR * max(abs(observed), abs(bound), 1.0)
    if slack < -budget:
        status = Status.VIOLATED
    elif abs(slack) < budget:
        status = Status.INCONCLUSIVE
    else:
        status = Status.HOLDS
    return BoundReport(observed, bound, slack, budget, status, evaluations,
                       notes)


def _identity(lhs: float, rhs: float, err: float, evaluations: int,
              notes: tuple[str, ...], flagged: bool) -> IdentityReport:
    residual = abs(lhs - rhs)
    scale = max(abs(lhs), abs(rhs), 1.0)
    budget = err + ERROR_FLOOR * scale
    if flagged:
        status = Status.INCONCLUSIVE
        notes = notes + ("quadrature tolerance not met",)
    elif residual <= budget:
        status = Status.HOLDS
    elif residual <= GRAY_FACTOR * budget:
        status = Status.INCONCLUSIVE
    else:
        status = Status.VIOLATED
    return IdentityReport(lhs, rhs, residual, scale, budget / scale, status,
                          evaluations, notes)


def _with_retry(build: Callable[[float], object], tol: float):
    report = build(tol)
    if report.status is Status.INCONCLUSIVE:
        tighter = build(tol / 100.0)
        return replace(tighter,
                       evaluations=report.evaluations + tighter.evaluations,
                       notes=tighter.notes + ("retried at tol/100",))
    return report


def _as_function(f: Union[FunctionSpec, Callable[[float], float]], a: float,
                 b: float) -> FunctionSpec:
    if isinstance(f, FunctionSpec):
        return f
    if callable(f):
        return FunctionSpec(getattr(f, "__name__", "anonymous"), f, None,
                            ConvexityKind.UNVERIFIED, a, b)
    raise DomainError(f"not a function: {f!r}")


def _gate(ok: bool, message: str, force: bool,
          notes: tuple[str, ...]) -> tuple[str, ...]:
    if ok:
        return notes
    if force:
        return notes + (f"hypotheses unmet: {message}",)
    raise DomainError(message)


def _convex_gate(f: FunctionSpec, a: float, b: float, force: bool,
                 notes: tuple[str, ...]) -> tuple[str, ...]:
    if f.certified_convex:
        return notes
    report = check_convexity(f.fn, a, b)
    notes = _gate(report.convex,
                  f"{f.label!r} failed the convexity sampling test "
                  f"(worst violation {report.worst_violation:.3e})",
                  force, notes)
    if report.convex:
        notes = notes + ("convexity sampled, not certified",)
    return notes


def _deriv_power_gate(f: FunctionSpec, q: float, force: bool,
                      notes: tuple[str, ...]) -> tuple[str, ...]:
    if f.deriv is None:
        raise DomainError(f"{f.label!r} carries no derivative")
    if f.admits_deriv_power(q):
        return notes
    report = check_deriv_power_convexity(f, q)
    notes = _gate(report.convex,
                  f"|{f.label}'|^{q:g} failed the convexity sampling test "
                  f"(worst violation {report.worst_violation:.3e})",
                  force, notes)
    if report.convex:
        notes = notes + (f"convexity of |f'|^{q:g} sampled, not certified",)
    return notes


def _weight_gate(g: WeightSpec, a: float, b: float, need_nonneg: bool,
                 force: bool, notes: tuple[str, ...]) -> tuple[str, ...]:
    if not isinstance(g, WeightSpec):
        raise DomainError("weights must be WeightSpec instances so their "
                          "symmetry flag is validated")
    if (g.a, g.b) != (a, b):
        raise DomainError(f"weight {g.label!r} is tied to "
                          f"[{g.a!r}, {g.b!r}], not [{a!r}, {b!r}]")
    notes = _gate(g.symmetric, f"weight {g.label!r} is not midpoint-symmetric",
                  force, notes)
    if need_nonneg:
        notes = _gate(g.nonnegative, f"weight {g.label!r} is not nonnegative",
                      force, notes)
    return notes


def _require_deriv(f: FunctionSpec) -> Callable[[float], float]:
    if f.deriv is None:
        raise DomainError(f"{f.label!r} carries no derivative")
    return f.deriv


def hh_classical(f, a: float, b: float, tol: float = DEFAULT_TOL,
                 force: bool = False) -> SandwichReport:
    """f((a+b)/2)  <=  mean of f over [a,b]  <=  (f(a)+f(b))/2."""
    if not (math.isfinite(a) and math.isfinite(b) and a < b):
        raise DomainError(f"need finite a < b, got [{a!r}, {b!r}]")
    f = _as_function(f, a, b)
    notes = _convex_gate(f, a, b, force, ())

    def build(t: float) -> SandwichReport:
        total = integrate_smooth(f.fn, a, b, t).scaled(1.0 / (b - a))
        lhs = f.fn(0.5 * (a + b))
        rhs = 0.5 * (f.fn(a) + f.fn(b))
        return _sandwich(lhs, total.value, rhs, total.abs_error_estimate,
                         total.evaluations, notes)

    return _with_retry(build, tol)


def fejer_classical(f, g: WeightSpec, tol: float = DEFAULT_TOL,
                    force: bool = False) -> SandwichReport:
    """Weighted version of the classical sandwich.

    f(m) int g  <=  int f g  <=  (f(a)+f(b))/2 int g

    for g nonnegative and symmetric about m = (a+b)/2.  The middle
    term is deliberately not divided by (b-a): with that extra factor
    the three terms would not scale alike, and the alpha = 1 limit of
    the fractional version is exactly the form used here.
    """
    if not isinstance(g, WeightSpec):
        raise DomainError("weights must be WeightSpec instances so their "
                          "symmetry flag is validated")
    a, b = g.a, g.b
    f = _as_function(f, a, b)
    notes = _weight_gate(g, a, b, True, force, ())
    notes = _convex_gate(f, a, b, force, notes)
    notes = notes + (_FEJER_NOTE,)

    def build(t: float) -> SandwichReport:
        total_g = integrate_smooth(g.fn, a, b, t)
        total_fg = integrate_smooth(lambda x: f.fn(x) * g.fn(x), a, b, t)
        fm = f.fn(0.5 * (a + b))
        avg = 0.5 * (f.fn(a) + f.fn(b))
        err = ((abs(fm) + abs(avg)) * total_g.abs_error_estimate
               + total_fg.abs_error_estimate)
        return _sandwich(fm * total_g.value, total_fg.value,
                         avg * total_g.value, err,
                         total_g.evaluations + total_fg.evaluations, notes)

    return _with_retry(build, tol)


def hh_fractional(f, s: FracSetting, tol: float = DEFAULT_TOL,
                  force: bool = False) -> SandwichReport:
    """Fractional sandwich of order alpha.

    f(m)  <=  Gamma(alpha+1) / (2 (b-a)^alpha) * (j_left f + j_right f)
          <=  (f(a)+f(b))/2
    """
    f = _as_function(f, s.a, s.b)
    notes = _convex_gate(f, s.a, s.b, force, ())
    c = gamma(s.alpha + 1.0) / (2.0 * s.width ** s.alpha)

    def build(t: float) -> SandwichReport:
        both = j_left(f.fn, s, t) + j_right(f.fn, s, t)
        lhs = f.fn(s.midpoint)
        rhs = 0.5 * (f.fn(s.a) + f.fn(s.b))
        return _sandwich(lhs, c * both.value, rhs,
                         c * both.abs_error_estimate, both.evaluations, notes)

    return _with_retry(build, tol)


def fejer_fractional(f, g: WeightSpec, s: FracSetting,
                     tol: float = DEFAULT_TOL,
                     force: bool = False) -> SandwichReport:
    """Weighted fractional sandwich of order alpha.

    With W = j_left(g) + j_right(g):

        f(m) W  <=  j_left(f g) + j_right(f g)  <=  (f(a)+f(b))/2 W

    for g nonnegative and symmetric about the midpoint.  At alpha = 1
    this degenerates to twice the classical weighted sandwich, and
    with g = 1 to the plain fractional sandwich scaled by
    2 (b-a)^alpha / Gamma(alpha+1).
    """
    f = _as_function(f, s.a, s.b)
    notes = _weight_gate(g, s.a, s.b, True, force, ())
    notes = _convex_gate(f, s.a, s.b, force, notes)

    def build(t: float) -> SandwichReport:
        w = j_left(g.fn, s, t) + j_right(g.fn, s, t)
        fg = lambda x: f.fn(x) * g.fn(x)
        mid = j_left(fg, s, t) + j_right(fg, s, t)
        fm = f.fn(s.midpoint)
        avg = 0.5 * (f.fn(s.a) + f.fn(s.b))
        err = ((abs(fm) + abs(avg)) * w.abs_error_estimate
               + mid.abs_error_estimate)
        return _sandwich(fm * w.value, mid.value, avg * w.value, err,
                         w.evaluations + mid.evaluations, notes)

    return _with_retry(build, tol)


def trapezoid_identity(f, s: FracSetting,
                       tol: float = DEFAULT_TOL) -> IdentityReport:
    """Exact representation of the trapezoid defect.

    (f(a)+f(b))/2 - Gamma(alpha+1)/(2 (b-a)^alpha) (j_left f + j_right f)
        = (b-a)/2 * int_0^1 [(1-t)^alpha - t^alpha] f'(t a + (1-t) b) dt

    Both sides are computed by unrelated quadratures and compared by
    residual.
    """
    f = _as_function(f, s.a, s.b)
    d = _require_deriv(f)
    a, b, alpha = s.a, s.b, s.alpha
    c = gamma(alpha + 1.0) / (2.0 * s.width ** alpha)

    def build(t: float) -> IdentityReport:
        both = j_left(f.fn, s, t) + j_right(f.fn, s, t)
        lhs = 0.5 * (f.fn(a) + f.fn(b)) - c * both.value
        inner = integrate_smooth(
            lambda u: ((1.0 - u) ** alpha - u ** alpha) * d(u * a + (1.0 - u) * b),
            0.0, 1.0, t)
        rhs = 0.5 * s.width * inner.value
        err = (c * both.abs_error_estimate
               + 0.5 * s.width * inner.abs_error_estimate)
        flagged = not (both.tolerance_met and inner.tolerance_met)
        return _identity(lhs, rhs, err, both.evaluations + inner.evaluations,
                         (), flagged)

    return _with_retry(build, tol)


def _deriv_sup_sample(d: Callable[[float], float], a: float, b: float) -> float:
    step = (b - a) / 32.0
    return max(abs(d(a + i * step)) for i in range(33))


def weighted_trapezoid_identity(f, g: WeightSpec, s: FracSetting,
                                tol: float = DEFAULT_TOL,
                                kernel: Optional[CumulativeKernel] = None
                                ) -> IdentityReport:
    """Weighted trapezoid defect as an integral against f'.

    With W = j_left(g) + j_right(g) and the cumulative kernel K,

    (f(a)+f(b))/2 * W - (j_left(fg) + j_right(fg))
        = (1/Gamma(alpha)) int_a^b K(t) f'(t) dt.

    Needs g symmetric about the midpoint (sign is unconstrained).  A
    precomputed kernel for the same (g, setting) may be passed to
    amortize corpus runs; the automatic retry always rebuilds it at
    the tighter tolerance.
    """
    f = _as_function(f, s.a, s.b)
    d = _require_deriv(f)
    notes = _weight_gate(g, s.a, s.b, False, False, ())
    a, b, alpha = s.a, s.b, s.alpha
    inv_gamma = 1.0 / gamma(alpha)
    dsup = _deriv_sup_sample(d, a, b) * 1.25 + 1.0

    first = [True]

    def build(t: float) -> IdentityReport:
        w = j_left(g.fn, s, t) + j_right(g.fn, s, t)
        fg = lambda x: f.fn(x) * g.fn(x)
        mid = j_left(fg, s, t) + j_right(fg, s, t)
        avg = 0.5 * (f.fn(a) + f.fn(b))
        lhs = avg * w.value - mid.value

        if kernel is not None and first[0]:
            kern = kernel
            build_evals = 0
        else:
            kern = cumulative_kernel(g.fn, a, b, alpha, tol=t)
            build_evals = kern.evaluations
        first[0] = False
        k0 = kern.evaluations
        outer = integrate_smooth(lambda x: kern(x) * d(x), a, b,
                                 t * gamma(alpha))
        rhs = inv_gamma * outer.value
        err = (abs(avg) * w.abs_error_estimate + mid.abs_error_estimate
               + inv_gamma * (outer.abs_error_estimate
                              + kern.abs_error_estimate * (b - a) * dsup))
        flagged = not (w.tolerance_met and mid.tolerance_met
                       and outer.tolerance_met and kern.tolerance_met)
        evals = (w.evaluations + mid.evaluations + outer.evaluations
                 + build_evals + (kern.evaluations - k0))
        return _identity(lhs, rhs, err, evals, notes, flagged)

    return _with_retry(build, tol)


def _trapezoid_gap(f: FunctionSpec, s: FracSetting,
                   t: float) -> tuple[float, float, int, bool]:
    # |lhs| of the unweighted trapezoid identity, with error accounting
    c = gamma(s.alpha + 1.0) / (2.0 * s.width ** s.alpha)
    both = j_left(f.fn, s, t) + j_right(f.fn, s, t)
    gap = abs(0.5 * (f.fn(s.a) + f.fn(s.b)) - c * both.value)
    return (gap, c * both.abs_error_estimate, both.evaluations,
            both.tolerance_met)


def _weighted_gap(f: FunctionSpec, g: WeightSpec, s: FracSetting,
                  t: float) -> tuple[float, float, int, bool]:
    # |lhs| of the weighted trapezoid identity
    w = j_left(g.fn, s, t) + j_right(g.fn, s, t)
    fg = lambda x: f.fn(x) * g.fn(x)
    mid = j_left(fg, s, t) + j_right(fg, s, t)
    avg = 0.5 * (f.fn(s.a) + f.fn(s.b))
    gap = abs(avg * w.value - mid.value)
    err = abs(avg) * w.abs_error_estimate + mid.abs_error_estimate
    return (gap, err, w.evaluations + mid.evaluations,
            w.tolerance_met and mid.tolerance_met)


def trapezoid_bound(f, s: FracSetting, tol: float = DEFAULT_TOL,
                    force: bool = False) -> BoundReport:
    """Defect bound from convexity of |f'|.

    |trapezoid defect|  <=  (b-a)/(2(alpha+1)) (1 - 2^-alpha)
                            (|f'(a)| + |f'(b)|)
    """
    f = _as_function(f, s.a, s.b)
    notes = _deriv_power_gate(f, 1.0, force, ())
    d = f.deriv
    bound = (s.width / (2.0 * (s.alpha + 1.0))
             * (1.0 - 2.0 ** (-s.alpha))
             * (abs(d(s.a)) + abs(d(s.b))))

    def build(t: float) -> BoundReport:
        gap, err, evals, _ = _trapezoid_gap(f, s, t)
        return _bound(gap, bound, err, evals, notes)

    return _with_retry(build, tol)


def weighted_bound_sup(f, g: WeightSpec, s: FracSetting,
                       tol: float = DEFAULT_TOL,
                       force: bool = False) -> BoundReport:
    """Weighted defect bound from convexity of |f'|.

    |weighted defect|  <=  (b-a)^(alpha+1) ||g||_inf / ((alpha+1) Gamma(alpha+1))
                           (1 - 2^-alpha) (|f'(a)| + |f'(b)|)
    """
    f = _as_function(f, s.a, s.b)
    notes = _weight_gate(g, s.a, s.b, False, force, ())
    notes = _deriv_power_gate(f, 1.0, force, notes)
    d = f.deriv
    gsup = sup_norm(g.fn, s.a, s.b)
    bound = (s.width ** (s.alpha + 1.0) * gsup
             / ((s.alpha + 1.0) * gamma(s.alpha + 1.0))
             * (1.0 - 2.0 ** (-s.alpha))
             * (abs(d(s.a)) + abs(d(s.b))))

    def build(t: float) -> BoundReport:
        gap, err, evals, _ = _weighted_gap(f, g, s, t)
        return _bound(gap, bound, err + 1e-9 * bound, evals, notes)

    return _with_retry(build, tol)


def _power_mean(d: Callable[[float], float], a: float, b: float,
                q: float) -> float:
    return ((abs(d(a)) ** q + abs(d(b)) ** q) / 2.0) ** (1.0 / q)


def weighted_bound_power_mean(f, g: WeightSpec, s: FracSetting, q: float,
                              tol: float = DEFAULT_TOL,
                              force: bool = False) -> BoundReport:
    """Weighted defect bound from convexity of |f'|^q, q > 1.

    |weighted defect|  <=  2 (b-a)^(alpha+1) ||g||_inf
                           / ((b-a)^(1/q) (alpha+1) Gamma(alpha+1))
                           * (1 - 2^-alpha)
                           * ((|f'(a)|^q + |f'(b)|^q)/2)^(1/q)

    Note the 1/(b-a)^(1/q) factor: it makes the bound scale like
    (b-a)^(alpha - 1/q) under dilation while the defect scales like
    (b-a)^alpha, so on long intervals this bound is tighter relative
    to its siblings and dominance should not be extrapolated across
    scales.
    """
    if not (q > 1.0 and math.isfinite(q)):
        raise DomainError(f"need q > 1, got {q!r}")
    f = _as_function(f, s.a, s.b)
    notes = _weight_gate(g, s.a, s.b, False, force, ())
    notes = _deriv_power_gate(f, q, force, notes)
    gsup = sup_norm(g.fn, s.a, s.b)
    bound = (2.0 * s.width ** (s.alpha + 1.0) * gsup
             / (s.width ** (1.0 / q) * (s.alpha + 1.0) * gamma(s.alpha + 1.0))
             * (1.0 - 2.0 ** (-s.alpha))
             * _power_mean(f.deriv, s.a, s.b, q))

    def build(t: float) -> BoundReport:
        gap, err, evals, _ = _weighted_gap(f, g, s, t)
        return _bound(gap, bound, err + 1e-9 * bound, evals, notes)

    return _with_retry(build, tol)


def weighted_bound_holder(f, g: WeightSpec, s: FracSetting,
                          pair: HolderPair, tol: float = DEFAULT_TOL,
                          force: bool = False) -> BoundReport:
    """Weighted defect bound via the Holder inequality, any alpha > 0.

    |weighted defect|  <=  2^(1/p) ||g||_inf (b-a)^(alpha+1)
                           / ((alpha p + 1)^(1/p) Gamma(alpha+1))
                           * (1 - 2^(-alpha p))^(1/p)
                           * ((|f'(a)|^q + |f'(b)|^q)/2)^(1/q)
    """
    f = _as_function(f, s.a, s.b)
    notes = _weight_gate(g, s.a, s.b, False, force, ())
    notes = _deriv_power_gate(f, pair.q, force, notes)
    p, q = pair.p, pair.q
    gsup = sup_norm(g.fn, s.a, s.b)
    bound = (2.0 ** (1.0 / p) * gsup * s.width ** (s.alpha + 1.0)
             / ((s.alpha * p + 1.0) ** (1.0 / p) * gamma(s.alpha + 1.0))
             * (1.0 - 2.0 ** (-s.alpha * p)) ** (1.0 / p)
             * _power_mean(f.deriv, s.a, s.b, q))

    def build(t: float) -> BoundReport:
        gap, err, evals, _ = _weighted_gap(f, g, s, t)
        return _bound(gap, bound, err + 1e-9 * bound, evals, notes)

    return _with_retry(build, tol)


def weighted_bound_holder_low_order(f, g: WeightSpec, s: FracSetting,
                                    pair: HolderPair,
                                    tol: float = DEFAULT_TOL,
                                    force: bool = False) -> BoundReport:
    """Sharper Holder-type bound, restricted to 0 < alpha <= 1.

    |weighted defect|  <=  ||g||_inf (b-a)^(alpha+1)
                           / ((alpha p + 1)^(1/p) Gamma(alpha+1))
                           * ((|f'(a)|^q + |f'(b)|^q)/2)^(1/q)

    The restriction is structural: the proof runs through the scalar
    power gap lemma, which fails for alpha > 1, so such settings are
    rejected outright.
    """
    if not (0.0 < s.alpha <= 1.0):
        raise DomainError(
            f"this bound is restricted to 0 < alpha <= 1, got {s.alpha!r}")
    f = _as_function(f, s.a, s.b)
    notes = _weight_gate(g, s.a, s.b, False, force, ())
    notes = _deriv_power_gate(f, pair.q, force, notes)
    p, q = pair.p, pair.q
    gsup = sup_norm(g.fn, s.a, s.b)
    bound = (gsup * s.width ** (s.alpha + 1.0)
             / ((s.alpha * p + 1.0) ** (1.0 / p) * gamma(s.alpha + 1.0))
             * _power_mean(f.deriv, s.a, s.b, q))

    def build(t: float) -> BoundReport:
        gap, err, evals, _ = _weighted_gap(f, g, s, t)
        return _bound(gap, bound, err + 1e-9 * bound, evals, notes)

    return _with_retry(build, tol)


def aux_integrals(s: FracSetting) -> AuxIntegralsReport:
    """Closed forms of two half-interval moments, checked numerically.

    e = int_a^m [(b-t)^alpha - (t-a)^alpha] (b-t) dt
      = (b-a)^(alpha+2)/(alpha+1) * ((alpha+1)/(alpha+2) - 2^-(alpha+1))
    f = int_a^m [(b-t)^alpha - (t-a)^alpha] (t-a) dt
      = (b-a)^(alpha+2)/(alpha+1) * (1/(alpha+2) - 2^-(alpha+1))

    Their sum, (b-a)^(alpha+2)/(alpha+1) * (1 - 2^-alpha), is the
    quantity the defect bounds are built from.
    """
    a, b, alpha = s.a, s.b, s.alpha
    m = s.midpoint
    base = s.width ** (alpha + 2.0) / (alpha + 1.0)
    e_closed = base * ((alpha + 1.0) / (alpha + 2.0) - 2.0 ** (-(alpha + 1.0)))
    f_closed = base * (1.0 / (alpha + 2.0) - 2.0 ** (-(alpha + 1.0)))
    scale = max(1.0, abs(e_closed), abs(f_closed))
    t = 1e-12 * scale
    bracket = lambda x: (b - x) ** alpha - (x - a) ** alpha
    e_num = integrate_smooth(lambda x: bracket(x) * (b - x), a, m, t)
    f_num = integrate_smooth(lambda x: bracket(x) * (x - a), a, m, t)
    tol_e = 1e-10 * max(1.0, abs(e_closed))
    tol_f = 1e-10 * max(1.0, abs(f_closed))
    if not (e_num.tolerance_met and f_num.tolerance_met):
        status = Status.INCONCLUSIVE
    elif (abs(e_closed - e_num.value) <= tol_e
          and abs(f_closed - f_num.value) <= tol_f):
        status = Status.HOLDS
    else:
        status = Status.VIOLATED
    err = e_num.abs_error_estimate + f_num.abs_error_estimate
    return AuxIntegralsReport(e_closed, e_num.value, f_closed, f_num.value,
                              err / scale + ERROR_FLOOR, status,
                              e_num.evaluations + f_num.evaluations, ())


def scalar_power_lemma(a: float, b: float, alpha: float) -> BoundReport:
    """|a^alpha - b^alpha| <= (b-a)^alpha for 0 <= a <= b, alpha in (0, 1].

    Pure arithmetic, no quadrature, so the comparison is essentially
    exact and a nonnegative slack counts as Holds outright.  The
    equality configurations (a = b, a = 0, or alpha = 1) evaluate to
    the same float on both sides and the non-strict inequality still
    holds.  Only a slack within a few rounding ulps of zero from below
    is reported Inconclusive.
    """
    if not (0.0 <= a <= b and math.isfinite(b)):
        raise DomainError(f"need 0 <= a <= b, got a={a!r}, b={b!r}")
    if not (0.0 < alpha <= 1.0):
        raise DomainError(f"need 0 < alpha <= 1, got {alpha!r}")
    observed = abs(a ** alpha - b ** alpha)
    bound = (b - a) ** alpha
    slack = bound - observed
    floor = 1e-15 * max(bound, 1.0)
    if slack >= 0.0:
        status = Status.HOLDS
    elif slack > -floor:
        status = Status.INCONCLUSIVE
    else:
        status = Status.VIOLATED
    return BoundReport(observed, bound, slack, floor, status, 0,
                       ("exact evaluation",))
