"""goldenseq: degree-n Fibonacci-type sequences, exactly and in closed form.

A recurrence spec is a monic polynomial x^n = a_{n-1} x^{n-1} + ... + a_0
read coefficient-up (a0 first).  From one spec the package derives:

* exact sequence terms (iterative and O(log k) single-term);
* the characteristic roots ("golden numbers"), with radical closed
  forms for degrees 2 and 3 and simultaneous iteration beyond;
* Binet-style closed forms with self-checking weights;
* the rational generating function and its exact series;
* the arithmetic trapezoid generalizing Pascal's triangle, with
  per-entry closed forms for degrees 2 and 3;
* ratio-convergence diagnostics and a cross-verification battery.
"""

from .analysis import (
    ConvergenceReport,
    IdentityReport,
    golden_identity_check,
    ratio_convergence,
    recover_cubic_conjugates,
)
from .binet import (
    BinetWeights,
    binet_cubic_closed,
    binet_eval,
    binet_quadratic_closed,
    check_cubic_closed_form,
    nearest_integer,
    solve_weights,
)
from .errors import (
    DegenerateSpectrumError,
    InvalidSpecError,
    PresetError,
    RootConvergenceError,
    SeedMismatchError,
    SingularSystemError,
    UnitRootError,
)
from .genfunc import (
    GeneratingFunction,
    build_genfunc,
    format_polynomial,
    series_coefficients,
    unit_function,
)
from .numerics import EXTENDED, PRECISIONS, STANDARD
from .presets import BUILTIN_PRESETS, Preset, load_presets, parse_rational
from .recurrence import (
    RecurrenceSpec,
    SeedVector,
    SymbolicTerm,
    generate,
    make_seeds,
    make_spec,
    symbolic_term,
    term_at,
)
from .reports import FormulaCheck, VerificationCheck
from .roots import (
    RootSet,
    SymmetricRelationsReport,
    cubic_roots,
    dominant_root,
    general_roots,
    pseudo_sign_combine,
    quadratic_roots,
    solve_roots,
    verify_symmetric_relations,
)
from .trapezoid import (
    Trapezoid,
    build_closed_form,
    build_expansion,
    check_closed_form,
    check_row_recurrence,
    coeff_cubic,
    coeff_quadratic,
    diagonal_sum,
    row_length,
    row_sum,
)
from .verify import has_failures, verify_all

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_PRESETS",
    "BinetWeights",
    "ConvergenceReport",
    "DegenerateSpectrumError",
    "EXTENDED",
    "FormulaCheck",
    "GeneratingFunction",
    "IdentityReport",
    "InvalidSpecError",
    "Preset",
    "PresetError",
    "PRECISIONS",
    "RecurrenceSpec",
    "RootConvergenceError",
    "RootSet",
    "STANDARD",
    "SeedMismatchError",
    "SeedVector",
    "SingularSystemError",
    "SymbolicTerm",
    "SymmetricRelationsReport",
    "Trapezoid",
    "UnitRootError",
    "VerificationCheck",
    "binet_cubic_closed",
    "binet_eval",
    "binet_quadratic_closed",
    "build_closed_form",
    "build_expansion",
    "build_genfunc",
    "check_closed_form",
    "check_cubic_closed_form",
    "check_row_recurrence",
    "coeff_cubic",
    "coeff_quadratic",
    "cubic_roots",
    "diagonal_sum",
    "dominant_root",
    "format_polynomial",
    "general_roots",
    "generate",
    "golden_identity_check",
    "has_failures",
    "load_presets",
    "make_seeds",
    "make_spec",
    "nearest_integer",
    "parse_rational",
    "pseudo_sign_combine",
    "quadratic_roots",
    "ratio_convergence",
    "recover_cubic_conjugates",
    "row_length",
    "row_sum",
    "series_coefficients",
    "solve_roots",
    "solve_weights",
    "symbolic_term",
    "term_at",
    "unit_function",
    "verify_all",
    "verify_symmetric_relations",
]
