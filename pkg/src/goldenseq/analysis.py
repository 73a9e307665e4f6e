"""Convergence of term ratios to the dominant root, and root identities.

The classical fact being generalized: consecutive-term ratios of a
Fibonacci-like sequence converge to the golden number, i.e. to the
characteristic root of largest modulus, provided that root is uniquely
dominant and the seeds actually excite it.  `ratio_convergence` runs
the experiment with exact rational arithmetic and reports why it
failed when it fails, instead of just returning False.
"""

from dataclasses import dataclass
from fractions import Fraction

from .binet import solve_weights
from .errors import DegenerateSpectrumError, SingularSystemError
from .numerics import STANDARD, check_precision, complex_number, csqrt, real_number, working_precision
from .recurrence import RecurrenceSpec, SeedVector, _check_seeds, _to_fraction, generate
from .roots import RootSet, dominant_root, solve_roots

TOL_CONV = 1e-8
TOL_IDENTITY = 1e-10
TOL_RECOVER = 1e-6


@dataclass(frozen=True)
class ConvergenceReport:
    ratios: tuple
    final_estimate: float | None
    target: object  # dominant root (complex in standard precision)
    abs_error: float | None
    converged: bool
    k_used: int | None
    reason: str | None
    # False when the premise of the limit theorem is absent (tied
    # dominance, seeds orthogonal to the dominant root, no usable
    # ratios); in that case non-convergence is expected, not a defect.
    hypothesis_met: bool = True


@dataclass(frozen=True)
class IdentityReport:
    residuals: tuple  # (name, value) pairs
    skipped: tuple  # human-readable notices for checks that do not apply
    tolerance: float
    passed: bool

    @property
    def max_residual(self) -> float:
        return max((v for _, v in self.residuals), default=0.0)


def ratio_convergence(
    spec: RecurrenceSpec,
    seeds: SeedVector,
    k_max: int = 60,
    precision: str = STANDARD,
) -> ConvergenceReport:
    """Track x_{k+1}/x_k for k <= k_max against the dominant root.

    Ratios are formed exactly and only converted to float at the end.
    Zero terms are skipped (their ratios are undefined); k_used is the
    largest k whose ratio was usable.
    """
    _check_seeds(spec, seeds)
    check_precision(precision)
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    if all(v == 0 for v in seeds):
        raise ValueError("all seeds are zero: the sequence is identically zero")

    terms = generate(spec, seeds, k_max + 2)
    ratios = []
    k_used = None
    for k in range(k_max + 1):
        if terms[k] != 0:
            ratios.append(float(terms[k + 1] / terms[k]))
            k_used = k
    estimate = ratios[-1] if ratios else None

    rootset = solve_roots(spec, precision)
    target, unique = dominant_root(rootset)
    abs_error = None
    if estimate is not None:
        abs_error = float(abs(complex_number(estimate, precision) - target))

    hypothesis_met = True
    reason = None
    if not unique:
        hypothesis_met = False
        reason = (
            "two characteristic roots tie for largest modulus; the "
            "ratios cannot settle on a single limit"
        )
    elif estimate is None:
        hypothesis_met = False
        reason = "no nonzero term produced a usable ratio"
    elif _dominant_weight_vanishes(spec, seeds, rootset):
        hypothesis_met = False
        reason = (
            "the seeds give (numerically) zero weight to the dominant "
            "root, so the ratios chase a smaller root instead"
        )
    elif abs_error > TOL_CONV:
        reason = "ratio still off by %.3e at k = %s; more terms may be needed" % (
            abs_error,
            k_used,
        )
    converged = bool(hypothesis_met and abs_error is not None and abs_error <= TOL_CONV)
    return ConvergenceReport(
        tuple(ratios), estimate, target, abs_error, converged, k_used, reason,
        hypothesis_met,
    )


def _dominant_weight_vanishes(spec, seeds, rootset) -> bool:
    try:
        weights = solve_weights(spec, seeds, rootset)
    except (DegenerateSpectrumError, SingularSystemError):
        return False
    scale = max(1.0, max(float(abs(w)) for w in weights.weights))
    return float(abs(weights.weights[rootset.dominant_index])) <= 1e-9 * scale


def golden_identity_check(
    spec: RecurrenceSpec,
    rootset: RootSet,
    tolerance: float | None = None,
) -> IdentityReport:
    """Check the defining identity r^n = sum a_j r^j at every root.

    For degree 2 with a_0 != 0 it also checks the reciprocal identity
    1/r = (r - a_1)/a_0 (the generalization of 1/phi = phi - 1).  When
    a_0 = 0 that identity divides by zero and is reported as skipped
    rather than silently dropped.
    """
    n = spec.degree
    if rootset.degree != n:
        raise ValueError(
            "root set degree %d does not match recurrence degree %d"
            % (rootset.degree, n)
        )
    if tolerance is None:
        tolerance = TOL_IDENTITY * max(
            1.0, max(float(abs(z)) for z in rootset.roots)
        ) ** n

    residuals = []
    skipped = []
    with working_precision(rootset.precision):
        coeffs = [complex_number(c, rootset.precision) for c in spec.coeffs]
        for idx, z in enumerate(rootset.roots):
            value = z**n - sum(c * z**j for j, c in enumerate(coeffs))
            residuals.append(("defining[%d]" % idx, float(abs(value))))
        if n == 2:
            beta, alpha = spec.coeffs
            if beta == 0:
                skipped.append(
                    "reciprocal identity skipped: constant coefficient is 0, "
                    "so 1/r = (r - a_1)/a_0 divides by zero"
                )
            else:
                bc = complex_number(beta, rootset.precision)
                ac = complex_number(alpha, rootset.precision)
                for idx, z in enumerate(rootset.roots):
                    value = 1 / z - (z - ac) / bc
                    residuals.append(("reciprocal[%d]" % idx, float(abs(value))))
    passed = all(v <= tolerance for _, v in residuals)
    return IdentityReport(tuple(residuals), tuple(skipped), tolerance, passed)


def recover_cubic_conjugates(alpha, gamma, ratio_limit, precision: str = STANDARD):
    """Recover the two non-dominant cubic roots from the ratio limit L.

    For x^3 = alpha x^2 + beta x + gamma with dominant root L, the other
    two roots are ((alpha - L) +/- sqrt((alpha - L)^2 - 4 gamma / L)) / 2:
    their sum is alpha - L and their product is gamma / L (the three
    roots multiply to gamma).  beta is not needed.
    """
    check_precision(precision)
    if ratio_limit == 0:
        raise ValueError("ratio limit must be nonzero (it divides gamma)")
    with working_precision(precision):
        a = real_number(_to_fraction(alpha, ValueError), precision)
        g = real_number(_to_fraction(gamma, ValueError), precision)
        lim = complex_number(ratio_limit, precision)
        d = a - lim
        s = csqrt(d * d - 4 * g / lim)
        return ((d + s) / 2, (d - s) / 2)
