"""Rational generating functions f(z) = T(z) / (1 - R(z)).

For a degree-n recurrence with ascending coefficients a_0..a_{n-1},
R(z) = a_{n-1} z + a_{n-2} z^2 + ... + a_0 z^n collects the recursion
and T(z) (degree <= n-1) absorbs the seeds:

    T_d = x_d - sum_{j=0}^{d-1} a_{n-1-j} x_{d-1-j}   (d >= 1),  T_0 = x_0.

Series extraction never divides polynomials: the coefficients come out
of the convolution c_k = t_k + sum_i r_i c_{k-i}, exactly, in Fractions.
"""

from dataclasses import dataclass
from fractions import Fraction

from .recurrence import RecurrenceSpec, SeedVector, _check_seeds, _to_fraction


def unit_function(n: int) -> int:
    """Discrete unit step: 1 for n >= 0, else 0."""
    return 1 if n >= 0 else 0


def _format_coeff_body(mag: Fraction, power: int, variable: str) -> str:
    if power == 0:
        return str(mag)
    var = variable if power == 1 else "%s^%d" % (variable, power)
    if mag == 1:
        return var
    if mag.denominator == 1:
        return "%s%s" % (mag, var)
    return "(%s)%s" % (mag, var)


def format_polynomial(coeffs, variable: str = "z") -> str:
    """ASCII rendering of a dense ascending coefficient list, e.g. 1 - z - z^2."""
    pieces = []
    for power, c in enumerate(coeffs):
        if c == 0:
            continue
        pieces.append(("-" if c < 0 else "+", _format_coeff_body(abs(c), power, variable)))
    if not pieces:
        return "0"
    sign, body = pieces[0]
    text = ("-" + body) if sign == "-" else body
    for sign, body in pieces[1:]:
        text += " %s %s" % (sign, body)
    return text


@dataclass(frozen=True)
class GeneratingFunction:
    """T(z)/(1 - R(z)) with dense ascending Fraction coefficients.

    numerator holds T; denominator_tail holds R including its zero
    constant term, so denominator_tail[i] multiplies z^i and
    denominator_tail[0] == 0 always.
    """

    numerator: tuple
    denominator_tail: tuple

    def __post_init__(self):
        num = tuple(_to_fraction(c, ValueError) for c in self.numerator)
        tail = tuple(_to_fraction(c, ValueError) for c in self.denominator_tail)
        if not num:
            num = (Fraction(0),)
        if not tail:
            tail = (Fraction(0),)
        if tail[0] != 0:
            raise ValueError(
                "denominator tail must have zero constant term (it sits under 1 - R(z))"
            )
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator_tail", tail)

    def display(self, variable: str = "z") -> str:
        num = format_polynomial(self.numerator, variable)
        den_coeffs = [Fraction(1)] + [-c for c in self.denominator_tail[1:]]
        den = format_polynomial(den_coeffs, variable)
        if sum(1 for c in self.numerator if c != 0) > 1:
            num = "(%s)" % num
        return "%s/(%s)" % (num, den)

    def __str__(self) -> str:
        return self.display()


def build_genfunc(spec: RecurrenceSpec, seeds: SeedVector) -> GeneratingFunction:
    """Generating function of the sequence defined by spec and seeds."""
    _check_seeds(spec, seeds)
    n = spec.degree
    coeffs = spec.coeffs
    numerator = []
    for d in range(n):
        t = seeds[d]
        if d >= 1:
            t -= sum(coeffs[n - 1 - j] * seeds[d - 1 - j] for j in range(d))
        numerator.append(t)
    tail = [Fraction(0)] + [coeffs[n - i] for i in range(1, n + 1)]
    return GeneratingFunction(tuple(numerator), tuple(tail))


def series_coefficients(gf: GeneratingFunction, count: int) -> list:
    """First `count` exact series coefficients of gf around z = 0."""
    if count < 0:
        raise ValueError("count must be >= 0")
    t = gf.numerator
    r = gf.denominator_tail
    out = []
    for k in range(count):
        c = t[k] if k < len(t) else Fraction(0)
        for i in range(1, min(k, len(r) - 1) + 1):
            if r[i]:
                c += r[i] * out[k - i]
        out.append(c)
    return out
