"""Exception types shared across the package."""


class InvalidSpecError(ValueError):
    """The given coefficients do not define a usable recurrence spec."""


class SeedMismatchError(ValueError):
    """A seed vector does not fit the spec it is used with."""


class DegenerateSpectrumError(ValueError):
    """Repeated characteristic roots rule out the distinct-root Binet form."""


class UnitRootError(ValueError):
    """A characteristic root equals 1, so a closed form would divide by zero."""


class SingularSystemError(ArithmeticError):
    """A linear solve collapsed; carries a crude condition estimate."""

    def __init__(self, message: str, condition_estimate: float | None = None):
        super().__init__(message)
        self.condition_estimate = condition_estimate


class RootConvergenceError(RuntimeError):
    """Iterative root refinement gave up; carries its best iterate."""

    def __init__(self, message: str, best_roots=(), residuals=(), iterations: int = 0):
        super().__init__(message)
        self.best_roots = tuple(best_roots)
        self.residuals = tuple(residuals)
        self.iterations = iterations


class PresetError(ValueError):
    """A preset catalog could not be parsed or merged."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "")
            message = f"{message} ({where})"
        super().__init__(message)
        self.line = line
        self.column = column
