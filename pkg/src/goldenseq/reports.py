"""Small shared report records (no logic, no heavy imports)."""

from dataclasses import dataclass, field


@dataclass(frozen=True)
class FormulaCheck:
    """Outcome of evaluating a closed formula against its oracle.

    first_mismatch is the first divergent position: an index k for
    sequence formulas, an (i, j) pair for trapezoid entries, None when
    everything matched.
    """

    matches: bool
    first_mismatch: object
    max_error: float
    tolerance: float
    note: str = ""


@dataclass(frozen=True)
class VerificationCheck:
    """One line of a verification report; field names are stable."""

    check: str
    status: str  # "pass" | "fail" | "skipped"
    residual: float | None
    detail: str = ""
    inputs: dict = field(default_factory=dict)
