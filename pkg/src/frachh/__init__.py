"""Numerical verification of Hermite-Hadamard / Fejer type statements
for fractional integral means.

The package splits into small layers:

* numerics: adaptive Gauss-Kronrod quadrature, singular-kernel
  integration, and the cumulative kernel transform,
* oracle: slow independent reimplementations used only to cross-check
  the fast paths,
* functions: the convex-function and symmetric-weight corpus with
  certification metadata,
* fracops: one-sided fractional integral means,
* inequalities: the verifiers, one per statement,
* cli: the ``frachh`` command.
"""

from .fracops import FracSetting, SymmetryReport, check_symmetry_lemma, j_left, j_right
from .functions import (ConvexityKind, ConvexityReport, FunctionSpec,
                        HolderPair, WeightSpec, builtin_function_corpus,
                        builtin_weight_corpus, check_convexity, make_weight,
                        sup_norm, symmetrize)
from .inequalities import (AuxIntegralsReport, BoundReport, IdentityReport,
                           SandwichReport, Status, aux_integrals,
                           fejer_classical, fejer_fractional, hh_classical,
                           hh_fractional, scalar_power_lemma,
                           trapezoid_bound, trapezoid_identity,
                           weighted_bound_holder,
                           weighted_bound_holder_low_order,
                           weighted_bound_power_mean, weighted_bound_sup,
                           weighted_trapezoid_identity)
from .numerics import (DEFAULT_TOL, CumulativeKernel, DomainError,
                       EvaluationError, KernelSide, QuadResult,
                       cumulative_kernel, gamma, integrate_singular,
                       integrate_smooth)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # numerics
    "DEFAULT_TOL", "CumulativeKernel", "DomainError", "EvaluationError",
    "KernelSide", "QuadResult", "cumulative_kernel", "gamma",
    "integrate_singular", "integrate_smooth",
    # functions
    "ConvexityKind", "ConvexityReport", "FunctionSpec", "HolderPair",
    "WeightSpec", "builtin_function_corpus", "builtin_weight_corpus",
    "check_convexity", "make_weight", "sup_norm", "symmetrize",
    # fracops
    "FracSetting", "SymmetryReport", "check_symmetry_lemma", "j_left",
    "j_right",
    # inequalities
    "AuxIntegralsReport", "BoundReport", "IdentityReport", "SandwichReport",
    "Status", "aux_integrals", "fejer_classical", "fejer_fractional",
    "hh_classical", "hh_fractional", "scalar_power_lemma", "trapezoid_bound",
    "trapezoid_identity", "weighted_bound_holder",
    "weighted_bound_holder_low_order", "weighted_bound_power_mean",
    "weighted_bound_sup", "weighted_trapezoid_identity",
]
