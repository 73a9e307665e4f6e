"""Floating-point plumbing for the approximate layers.

The exact modules (recurrence, genfunc, trapezoid) never import this.
Root finding, Binet weights, and convergence diagnostics work in one of
two precisions:

* "standard": Python float/complex (53-bit significand);
* "extended": mpmath at 40 significant digits (well above 113 bits).

Helpers here are written generically so the same arithmetic code runs on
either representation.
"""

import cmath
from contextlib import contextmanager
from fractions import Fraction

import mpmath

STANDARD = "standard"
EXTENDED = "extended"
PRECISIONS = (STANDARD, EXTENDED)

EXTENDED_DPS = 40

# Unit roundoff per precision, used for residual noise floors.
_EPS = {STANDARD: 2.220446049250313e-16, EXTENDED: mpmath.mpf(10) ** (-EXTENDED_DPS + 1)}


def check_precision(precision: str):
    if precision not in PRECISIONS:
        raise ValueError(f"precision must be one of {PRECISIONS}, got {precision!r}")


@contextmanager
def working_precision(precision: str):
    """Context manager installing the mpmath working precision when needed."""
    check_precision(precision)
    if precision == EXTENDED:
        with mpmath.workdps(EXTENDED_DPS):
            yield
    else:
        yield


def epsilon(precision: str):
    return _EPS[precision]


def real_number(value, precision: str = STANDARD):
    """Exact rational (or int) to a real number of the chosen precision."""
    if precision == EXTENDED:
        if isinstance(value, Fraction):
            return mpmath.mpf(value.numerator) / value.denominator
        return mpmath.mpf(value)
    return float(value)


def complex_number(value, precision: str = STANDARD):
    if precision == EXTENDED:
        return mpmath.mpc(real_number(value, precision))
    return complex(float(value))


def is_mp(z) -> bool:
    return isinstance(z, (mpmath.mpf, mpmath.mpc))


def csqrt(z):
    """Principal square root, complex-capable, either representation."""
    if is_mp(z):
        return mpmath.sqrt(z)
    return cmath.sqrt(z)


def ccbrt(z):
    """Principal cube root (complex for negative reals, unlike math.cbrt)."""
    if is_mp(z):
        return mpmath.cbrt(z)
    z = complex(z)
    if z == 0:
        return 0j
    return z ** (1.0 / 3.0)


def solve_linear_system(matrix, rhs, max_condition: float):
    """Gaussian elimination with partial pivoting over complex scalars.

    Generic over builtin complex and mpmath numbers. Returns the solution
    list. The ratio of the largest to the smallest pivot magnitude serves
    as a cheap condition estimate; past max_condition the system is
    treated as singular.
    """
    from .errors import SingularSystemError

    n = len(matrix)
    aug = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    pivot_sizes = []
    for col in range(n):
        pivot_row = max(range(col, n), key=lambda r: abs(aug[r][col]))
        pivot = aug[pivot_row][col]
        size = abs(pivot)
        if size == 0:
            raise SingularSystemError(
                "linear system is singular (zero pivot)", condition_estimate=float("inf")
            )
        aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        pivot_sizes.append(size)
        for r in range(col + 1, n):
            factor = aug[r][col] / pivot
            if factor != 0:
                for c in range(col, n + 1):
                    aug[r][c] -= factor * aug[col][c]
    condition = float(max(pivot_sizes) / min(pivot_sizes))
    if condition > max_condition:
        raise SingularSystemError(
            f"linear system is numerically singular (condition estimate {condition:.3e})",
            condition_estimate=condition,
        )
    solution = [None] * n
    for r in range(n - 1, -1, -1):
        acc = aug[r][n]
        for c in range(r + 1, n):
            acc -= aug[r][c] * solution[c]
        solution[r] = acc / aug[r][r]
    return solution
