"""Exact engine for degree-n linear recurrences tied to monic polynomials.

A spec with coefficients (a0, ..., a_{n-1}) encodes two objects at once:

    x^n     = a_{n-1} x^{n-1} + ... + a_1 x + a_0
    x_{k+n} = a_{n-1} x_{k+n-1} + ... + a_1 x_{k+1} + a_0 x_k

Coefficients are stored ascending, a0 first, so a_{n-1} is the one that
multiplies x_{k+n-1}. Everything in this module is exact rational
arithmetic; sequences grow exponentially and floating point would corrupt
the tables downstream modules reproduce bit-for-bit.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidSpecError, SeedMismatchError


def _to_fraction(value, error_cls):
    """Convert an int, Fraction, or 'p/q' string; reject inexact types."""
    if isinstance(value, (float, complex)):
        raise error_cls(f"exact rational required, got inexact {value!r}")
    try:
        return Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise error_cls(f"not a rational value: {value!r}") from exc


@dataclass(frozen=True)
class RecurrenceSpec:
    """Coefficients a0..a_{n-1} of a monic polynomial / linear recurrence."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise InvalidSpecError("a spec needs at least one coefficient")

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    @property
    def degenerate(self) -> bool:
        """True when a0 == 0: x = 0 is a characteristic root and the
        recurrence factors through a lower degree."""
        return self.coeffs[0] == 0


@dataclass(frozen=True)
class SeedVector:
    """Initial terms x_0..x_{n-1}, exact rationals."""

    values: tuple[Fraction, ...]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, idx):
        return self.values[idx]


def make_spec(coeffs) -> RecurrenceSpec:
    """Build a spec from a list of rationals (ints, Fractions, or 'p/q')."""
    values = tuple(_to_fraction(c, InvalidSpecError) for c in coeffs)
    if not values:
        raise InvalidSpecError("a spec needs at least one coefficient")
    return RecurrenceSpec(values)


def make_seeds(values) -> SeedVector:
    seeds = tuple(_to_fraction(v, SeedMismatchError) for v in values)
    if not seeds:
        raise SeedMismatchError("a seed vector needs at least one entry")
    return SeedVector(seeds)


def _check_seeds(spec: RecurrenceSpec, seeds: SeedVector):
    if len(seeds) != spec.degree:
        raise SeedMismatchError(
            f"spec has degree {spec.degree} but {len(seeds)} seeds were given"
        )


def generate(spec: RecurrenceSpec, seeds: SeedVector, count: int) -> list[Fraction]:
    """First `count` terms of the sequence, exactly.

    Plain O(count * n) iteration; use term_at for a single far-out index.
    """
    _check_seeds(spec, seeds)
    if count < 0:
        raise ValueError("count must be >= 0")
    n = spec.degree
    terms = list(seeds.values[:count])
    while len(terms) < count:
        nxt = Fraction(0)
        for j, a in enumerate(spec.coeffs):
            if a:
                nxt += a * terms[len(terms) - n + j]
        terms.append(nxt)
    return terms


def _mat_mul(a, b, n):
    out = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        row = a[i]
        oi = out[i]
        for k in range(n):
            aik = row[k]
            if aik:
                bk = b[k]
                for j in range(n):
                    if bk[j]:
                        oi[j] += aik * bk[j]
    return out


def _companion(spec: RecurrenceSpec):
    """Companion matrix advancing the state (x_k, ..., x_{k+n-1}) one step."""
    n = spec.degree
    m = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n - 1):
        m[i][i + 1] = Fraction(1)
    m[n - 1] = list(spec.coeffs)
    return m


def _power_first_row(spec: RecurrenceSpec, k: int) -> list[Fraction]:
    """First row of the k-th companion-matrix power.

    Dotted with the seeds this row gives x_k; it is also the exact
    coefficient vector of x_k as a linear form in x_0..x_{n-1}.
    """
    n = spec.degree
    result = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    base = _companion(spec)
    e = k
    while e:
        if e & 1:
            result = _mat_mul(result, base, n)
        e >>= 1
        if e:
            base = _mat_mul(base, base, n)
    return result[0]


def term_at(spec: RecurrenceSpec, seeds: SeedVector, k: int) -> Fraction:
    """x_k via companion-matrix binary exponentiation, O(n^3 log k) exact."""
    _check_seeds(spec, seeds)
    if k < 0:
        raise ValueError("k must be >= 0 (backward extension is not defined)")
    row = _power_first_row(spec, k)
    return sum((c * s for c, s in zip(row, seeds) if c), Fraction(0))


@dataclass(frozen=True)
class SymbolicTerm:
    """x_k written as an exact linear form over the seeds."""

    k: int
    seed_coeffs: tuple[Fraction, ...]

    def evaluate(self, seeds: SeedVector) -> Fraction:
        if len(seeds) != len(self.seed_coeffs):
            raise SeedMismatchError(
                f"linear form has {len(self.seed_coeffs)} coefficients, got {len(seeds)} seeds"
            )
        return sum((c * s for c, s in zip(self.seed_coeffs, seeds) if c), Fraction(0))


def symbolic_term(spec: RecurrenceSpec, k: int) -> SymbolicTerm:
    """Coefficients of x_0..x_{n-1} expressing x_k; unit vector for k < n."""
    if k < 0:
        raise ValueError("k must be >= 0 (backward extension is not defined)")
    return SymbolicTerm(k, tuple(_power_first_row(spec, k)))
