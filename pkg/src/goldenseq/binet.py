"""Closed-form (Binet-style) evaluation of recurrence terms.

The generic path solves
    x_r = w_1 r_1^r + ... + w_n r_n^r + w_{n+1},  r = 0 .. n
for the weights w.  The extra constant weight w_{n+1} acts as a
consistency probe: for a genuine degree-n recurrence it must come out
as (numerically) zero unless 1 itself is a root of the characteristic
polynomial, in which case the system is singular and we refuse to
solve it rather than return garbage.

Degree-2 and degree-3 also get direct closed forms written entirely in
terms of the roots and seeds.  The quadratic one is reliable.  The
cubic one reproduces a published formula verbatim; `check_cubic_closed_form`
compares it against the exact recurrence and reports a formula mismatch
instead of silently trusting it (on most inputs it disagrees from k = 0,
so the generic weights path stays authoritative).
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateSpectrumError, SeedMismatchError, UnitRootError
from .numerics import (
    EXTENDED,
    STANDARD,
    check_precision,
    complex_number,
    csqrt,
    is_mp,
    solve_linear_system,
    working_precision,
)
from .recurrence import (
    RecurrenceSpec,
    SeedVector,
    _check_seeds,
    generate,
    make_seeds,
    make_spec,
    term_at,
)
from .reports import FormulaCheck
from .roots import RootSet, cubic_roots, quadratic_roots

try:
    import mpmath
except ImportError:  # pragma: no cover
    mpmath = None

# Tolerances are relative to the scale of the data they gate.
TOL_W = 1e-9  # |w_{n+1}| must stay below TOL_W * max(1, max |seed term|)
TOL_IM = 1e-9  # imaginary part allowed when rounding to an integer
TOL_BINET = 1e-6  # relative agreement demanded from closed forms
TOL_SEP = 1e-8  # pairwise root separation, scaled by (1 + max |root|)
K_MAX_CHECKED = 40

_MAX_CONDITION = {STANDARD: 1e12, EXTENDED: 1e30}


@dataclass(frozen=True)
class BinetWeights:
    """Solved weights; weights[-1] is the constant probe w_{n+1}."""

    weights: tuple
    degree: int
    precision: str

    def __iter__(self):
        return iter(self.weights)


def _separation_scale(rootset: RootSet):
    return 1 + max(abs(z) for z in rootset.roots)


def check_separation(rootset: RootSet, tolerance: float = TOL_SEP) -> None:
    """Raise DegenerateSpectrumError when two roots (nearly) coincide."""
    scale = tolerance * _separation_scale(rootset)
    roots = rootset.roots
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            if abs(roots[i] - roots[j]) < scale:
                raise DegenerateSpectrumError(
                    "characteristic roots %d and %d coincide within %.1e; "
                    "the weight system is singular (repeated roots need "
                    "polynomial-in-k terms, which this closed form does not "
                    "carry)" % (i, j, scale)
                )


def _check_unit_root(rootset: RootSet) -> None:
    scale = TOL_SEP * _separation_scale(rootset)
    for z in rootset.roots:
        if abs(z - 1) < scale:
            raise UnitRootError(
                "1 is a characteristic root; the closed form divides by "
                "(root - 1) and is undefined here"
            )


def solve_weights(
    spec: RecurrenceSpec,
    seeds: SeedVector,
    rootset: RootSet,
    precision: str | None = None,
) -> BinetWeights:
    """Solve the (n+1)x(n+1) weight system for the generic closed form.

    Raises DegenerateSpectrumError for (near-)repeated roots and
    SingularSystemError when the linear system is unsolvable, which is
    exactly what happens when 1 is a characteristic root: the constant
    column collides with a root column.
    """
    _check_seeds(spec, seeds)
    if precision is None:
        precision = rootset.precision
    check_precision(precision)
    if rootset.degree != spec.degree:
        raise SeedMismatchError(
            "root set has degree %d but the recurrence has degree %d"
            % (rootset.degree, spec.degree)
        )
    check_separation(rootset)

    n = spec.degree
    terms = generate(spec, seeds, n + 1)
    with working_precision(precision):
        one = complex_number(1, precision)
        rows = []
        powers = [one for _ in range(n)]
        for r in range(n + 1):
            rows.append(list(powers) + [one])
            powers = [p * z for p, z in zip(powers, rootset.roots)]
        rhs = [complex_number(t, precision) for t in terms]
        solution = solve_linear_system(rows, rhs, _MAX_CONDITION[precision])

        scale = max(1.0, max(float(abs(v)) for v in rhs))
        probe = float(abs(solution[-1]))
    if probe > TOL_W * scale:
        raise DegenerateSpectrumError(
            "constant probe weight %.3e exceeds %.1e * %.3g; the seed data "
            "is inconsistent with a pure power-sum closed form"
            % (probe, TOL_W, scale)
        )
    return BinetWeights(tuple(solution), n, precision)


def binet_eval(weights: BinetWeights, rootset: RootSet, k: int):
    """Evaluate sum of w_j root_j^k (+ constant probe) at integer k >= 0."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if rootset.degree != weights.degree:
        raise SeedMismatchError(
            "weights were solved for degree %d, root set has degree %d"
            % (weights.degree, rootset.degree)
        )
    with working_precision(weights.precision):
        total = weights.weights[-1]
        for w, z in zip(weights.weights[:-1], rootset.roots):
            total = total + w * z**k
    return total


def nearest_integer(value, tol_im: float = TOL_IM) -> int:
    """Round a (near-real) complex value to the nearest integer.

    Raises ValueError when the imaginary part is larger than tol_im
    relative to the magnitude of the value: rounding such a value would
    hide a real inconsistency.
    """
    scale = max(1.0, float(abs(value)))
    if abs(float(value.imag)) > tol_im * scale:
        raise ValueError(
            "imaginary part %.3e too large to round to an integer"
            % float(value.imag)
        )
    real = value.real
    if is_mp(real):
        return int(mpmath.nint(real))
    return int(round(real))


def _exact(value) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


def binet_quadratic_closed(alpha, beta, seeds, k: int, precision: str = STANDARD):
    """Degree-2 closed form: ((phi - a) x0 + x1)/sigma * (phi^k - varphi^k) + varphi^k x0.

    sigma = sqrt(a^2 + 4 b) is the root gap; a repeated root (sigma = 0)
    raises DegenerateSpectrumError.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if len(seeds) != 2:
        raise SeedMismatchError("quadratic closed form needs exactly 2 seeds")
    a, b = _exact(alpha), _exact(beta)
    disc = a * a + 4 * b
    if disc == 0:
        raise DegenerateSpectrumError(
            "discriminant a^2 + 4b is zero: repeated root, closed form undefined"
        )
    rootset = quadratic_roots(a, b, precision)
    phi, varphi = rootset.roots
    with working_precision(precision):
        sigma = csqrt(complex_number(disc, precision))
        x0 = complex_number(seeds[0], precision)
        x1 = complex_number(seeds[1], precision)
        ac = complex_number(a, precision)
        return ((phi - ac) * x0 + x1) / sigma * (phi**k - varphi**k) + varphi**k * x0


def binet_cubic_closed(alpha, beta, gamma, seeds, k: int, precision: str = STANDARD):
    """Degree-3 closed form, transcribed verbatim from its source.

    Requires three distinct roots, none equal to 1 (the formula divides
    by root - 1 factors).  See check_cubic_closed_form: on most inputs
    this expression does NOT reproduce the recurrence, so use it only
    through the checking wrapper.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if len(seeds) != 3:
        raise SeedMismatchError("cubic closed form needs exactly 3 seeds")
    a, b, g = _exact(alpha), _exact(beta), _exact(gamma)
    rootset = cubic_roots(a, b, g, precision)
    check_separation(rootset)
    _check_unit_root(rootset)
    phi, varphi, psi = rootset.roots
    with working_precision(precision):
        x0 = complex_number(seeds[0], precision)
        x1 = complex_number(seeds[1], precision)
        x2 = complex_number(seeds[2], precision)
        ac = complex_number(a, precision)
        bc = complex_number(b, precision)
        gc = complex_number(g, precision)

        pref = (
            (ac - varphi - psi - 1) * x2
            + (bc + varphi * psi + varphi + psi) * x1
            + (gc - varphi * psi) * x0
        ) / ((phi - varphi) * (varphi - psi) * (phi - psi))
        comb = (
            (psi - varphi) / (phi - 1) * phi**k
            - (psi - phi) / (varphi - 1) * varphi**k
            + (varphi - phi) / (psi - 1) * psi**k
        )
        tail = (
            (x2 - (varphi + 1) * x1 + varphi * x0)
            / ((psi - 1) * (psi - varphi))
            * psi**k
            - (x2 - (psi + 1) * x1 + psi * x0)
            / ((varphi - 1) * (psi - varphi))
            * varphi**k
        )
        return pref * comb + tail


def check_cubic_closed_form(
    alpha,
    beta,
    gamma,
    seeds,
    k_max: int = 10,
    precision: str = STANDARD,
) -> FormulaCheck:
    """Compare the verbatim cubic closed form against the exact recurrence.

    Returns a FormulaCheck; matches=False carries the first divergent k
    and the largest relative error seen.  Callers should treat the
    generic weights path as authoritative whenever matches is False.
    """
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    a, b, g = _exact(alpha), _exact(beta), _exact(gamma)
    spec = make_spec([g, b, a])
    seed_vec = seeds if isinstance(seeds, SeedVector) else make_seeds(seeds)
    _check_seeds(spec, seed_vec)

    first_bad = None
    max_err = 0.0
    for k in range(k_max + 1):
        value = binet_cubic_closed(a, b, g, seed_vec, k, precision)
        exact = term_at(spec, seed_vec, k)
        ref = complex_number(exact, precision)
        err = float(abs(value - ref)) / max(1.0, float(abs(ref)))
        max_err = max(max_err, err)
        if err > TOL_BINET and first_bad is None:
            first_bad = k
    if first_bad is None:
        note = "closed form matches the recurrence for k <= %d" % k_max
    else:
        note = (
            "formula mismatch: first divergence at k = %d (relative error "
            "%.3e); falling back to the generic weights path" % (first_bad, max_err)
        )
    return FormulaCheck(
        matches=first_bad is None,
        first_mismatch=first_bad,
        max_error=max_err,
        tolerance=TOL_BINET,
        note=note,
    )
