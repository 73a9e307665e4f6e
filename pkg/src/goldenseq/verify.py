"""Cross-verification battery: every identity checked against an
independent computation of the same quantity.

Each check pairs a closed form with an oracle that shares no code path
with it (exact recurrence vs. root-based evaluation, expansion vs.
per-entry formula, and so on).  Checks that do not apply to the given
input — repeated roots, degenerate specs, degrees without closed forms —
report status "skipped" with the reason, never a fake pass.
"""

from fractions import Fraction

from .analysis import golden_identity_check, ratio_convergence, recover_cubic_conjugates
from .binet import (
    TOL_BINET,
    TOL_W,
    binet_eval,
    binet_quadratic_closed,
    check_cubic_closed_form,
    nearest_integer,
    solve_weights,
)
from .errors import (
    DegenerateSpectrumError,
    RootConvergenceError,
    SingularSystemError,
    UnitRootError,
)
from .genfunc import build_genfunc, series_coefficients
from .numerics import STANDARD, check_precision, complex_number
from .recurrence import RecurrenceSpec, SeedVector, _check_seeds, generate, term_at
from .reports import VerificationCheck
from .roots import solve_roots, verify_symmetric_relations
from .trapezoid import (
    build_expansion,
    check_closed_form,
    check_row_recurrence,
    diagonal_sum,
    row_sum,
)

TOL_RECOVERY = 1e-6


def verify_all(
    spec: RecurrenceSpec,
    seeds: SeedVector,
    k_max: int = 40,
    rows: int = 8,
    precision: str = STANDARD,
) -> list:
    """Run every applicable cross-check; returns VerificationCheck rows.

    Statuses: "pass", "fail", "skipped" (with the reason in detail).
    """
    _check_seeds(spec, seeds)
    check_precision(precision)
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    if rows < 2:
        raise ValueError("rows must be >= 2 (row checks need adjacent pairs)")

    echo = {
        "coeffs": [str(c) for c in spec.coeffs],
        "seeds": [str(s) for s in seeds],
        "k_max": k_max,
        "rows": rows,
        "precision": precision,
    }
    checks: list = []

    def add(name, status, residual=None, detail=""):
        checks.append(VerificationCheck(name, status, residual, detail, dict(echo)))

    rootset = None
    try:
        rootset = solve_roots(spec, precision)
    except RootConvergenceError as exc:
        root_note = "roots unavailable: %s" % exc

    # --- root-level identities -------------------------------------
    if rootset is None:
        add("symmetric_relations", "skipped", detail=root_note)
        add("golden_identity_defining", "skipped", detail=root_note)
    else:
        sym = verify_symmetric_relations(rootset, spec)
        add(
            "symmetric_relations",
            "pass" if sym.passed else "fail",
            sym.max_residual,
            "elementary symmetric polynomials vs. coefficients",
        )
        idreport = golden_identity_check(spec, rootset)
        defining = [v for name, v in idreport.residuals if name.startswith("defining")]
        add(
            "golden_identity_defining",
            "pass" if max(defining) <= idreport.tolerance else "fail",
            max(defining),
            "r^n = sum of a_j r^j at every root",
        )
        if spec.degree == 2:
            reciprocal = [
                v for name, v in idreport.residuals if name.startswith("reciprocal")
            ]
            if reciprocal:
                add(
                    "golden_identity_inverse",
                    "pass" if max(reciprocal) <= idreport.tolerance else "fail",
                    max(reciprocal),
                    "1/r = (r - a_1)/a_0 at both roots",
                )
            else:
                add(
                    "golden_identity_inverse",
                    "skipped",
                    detail=idreport.skipped[0] if idreport.skipped else "not applicable",
                )

    # --- Binet weights and round trip -------------------------------
    weights = None
    if rootset is None:
        add("binet_constant_weight", "skipped", detail=root_note)
        add("recurrence_binet_roundtrip", "skipped", detail=root_note)
    else:
        try:
            weights = solve_weights(spec, seeds, rootset)
        except (DegenerateSpectrumError, SingularSystemError) as exc:
            add("binet_constant_weight", "skipped", detail=str(exc))
            add("recurrence_binet_roundtrip", "skipped", detail=str(exc))
        else:
            terms = generate(spec, seeds, k_max + 1)
            scale = max(1.0, max(float(abs(t)) for t in terms[: spec.degree + 1]))
            probe = float(abs(weights.weights[-1]))
            add(
                "binet_constant_weight",
                "pass" if probe <= TOL_W * scale else "fail",
                probe,
                "constant probe weight w_{n+1} must vanish",
            )
            worst = 0.0
            first_bad = None
            for k in range(k_max + 1):
                value = binet_eval(weights, rootset, k)
                ref = complex_number(terms[k], precision)
                err = float(abs(value - ref)) / max(1.0, float(abs(ref)))
                worst = max(worst, err)
                if err > TOL_BINET and first_bad is None:
                    first_bad = k
            add(
                "recurrence_binet_roundtrip",
                "pass" if first_bad is None else "fail",
                worst,
                "exact terms vs. root-power evaluation for k <= %d" % k_max
                if first_bad is None
                else "first divergence at k = %d" % first_bad,
            )

    # --- closed Binet forms -----------------------------------------
    if spec.degree == 2:
        beta, alpha = spec.coeffs
        try:
            worst = 0.0
            first_bad = None
            for k in range(min(k_max, 30) + 1):
                value = binet_quadratic_closed(alpha, beta, seeds, k, precision)
                ref = complex_number(term_at(spec, seeds, k), precision)
                err = float(abs(value - ref)) / max(1.0, float(abs(ref)))
                worst = max(worst, err)
                if err > TOL_BINET and first_bad is None:
                    first_bad = k
        except DegenerateSpectrumError as exc:
            add("binet_quadratic_closed_matches", "skipped", detail=str(exc))
        else:
            add(
                "binet_quadratic_closed_matches",
                "pass" if first_bad is None else "fail",
                worst,
                ""
                if first_bad is None
                else "first divergence at k = %d" % first_bad,
            )
    if spec.degree == 3:
        gamma, beta, alpha = spec.coeffs
        try:
            report = check_cubic_closed_form(
                alpha, beta, gamma, seeds, min(k_max, 20), precision
            )
        except (DegenerateSpectrumError, UnitRootError) as exc:
            add("binet_cubic_closed_matches", "skipped", detail=str(exc))
        else:
            add(
                "binet_cubic_closed_matches",
                "pass" if report.matches else "fail",
                report.max_error,
                report.note,
            )

    # --- generating function ----------------------------------------
    gf = build_genfunc(spec, seeds)
    series = series_coefficients(gf, k_max + 1)
    direct = generate(spec, seeds, k_max + 1)
    bad = next((k for k, (a, b) in enumerate(zip(series, direct)) if a != b), None)
    add(
        "genfunc_series_roundtrip",
        "pass" if bad is None else "fail",
        0.0 if bad is None else float(abs(series[bad] - direct[bad])),
        "series of %s vs. the recurrence (exact)" % gf.display()
        if bad is None
        else "first divergence at k = %d" % bad,
    )

    # --- trapezoid ----------------------------------------------------
    trap = build_expansion(spec, seeds, rows)
    if spec.degree in (2, 3):
        closed = check_closed_form(spec, seeds, rows)
        add(
            "trapezoid_closed_form",
            "pass" if closed.matches else "fail",
            closed.max_error,
            closed.note,
        )
    else:
        add(
            "trapezoid_closed_form",
            "skipped",
            detail="per-entry closed forms exist only for degrees 2 and 3",
        )
    violations = check_row_recurrence(trap)
    add(
        "trapezoid_row_recurrence",
        "pass" if not violations else "fail",
        float(len(violations)),
        "every adjacent row pair"
        if not violations
        else "first violation at (i, j) = (%d, %d)" % violations[0][:2],
    )
    bad = None
    for i in range(rows):
        if row_sum(i, spec, seeds) != sum(trap.rows[i], Fraction(0)):
            bad = i
            break
    add(
        "trapezoid_row_sums",
        "pass" if bad is None else "fail",
        None,
        "closed-form row sums vs. direct sums (exact)"
        if bad is None
        else "first divergence at row %d" % bad,
    )
    bad = None
    for i in range(rows):
        if diagonal_sum(trap, i) != term_at(spec, seeds, i):
            bad = i
            break
    add(
        "trapezoid_diagonal_sums",
        "pass" if bad is None else "fail",
        None,
        "diagonal sums reproduce the sequence (exact)"
        if bad is None
        else "first divergence at diagonal %d" % bad,
    )

    # --- convergence and root recovery -------------------------------
    conv = None
    try:
        conv = ratio_convergence(spec, seeds, max(k_max, 60), precision)
    except ValueError as exc:
        add("ratio_convergence", "skipped", detail=str(exc))
    else:
        if conv.converged:
            conv_status = "pass"
        elif not conv.hypothesis_met:
            conv_status = "skipped"  # non-convergence is expected here
        else:
            conv_status = "fail"
        add(
            "ratio_convergence",
            conv_status,
            conv.abs_error,
            conv.reason or "ratios reach the dominant root",
        )
    if spec.degree == 3:
        if conv is not None and conv.converged and rootset is not None:
            gamma, _, alpha = spec.coeffs
            pair = recover_cubic_conjugates(alpha, gamma, conv.final_estimate, precision)
            others = [
                z
                for j, z in enumerate(rootset.roots)
                if j != rootset.dominant_index
            ]
            direct_err = max(abs(pair[0] - others[0]), abs(pair[1] - others[1]))
            swapped_err = max(abs(pair[0] - others[1]), abs(pair[1] - others[0]))
            err = float(min(direct_err, swapped_err))
            add(
                "cubic_ratio_root_recovery",
                "pass" if err <= TOL_RECOVERY else "fail",
                err,
                "non-dominant roots recovered from the ratio limit",
            )
        else:
            add(
                "cubic_ratio_root_recovery",
                "skipped",
                detail="needs a converged ratio limit and a solved root set",
            )
    return checks


def has_failures(checks) -> bool:
    return any(c.status == "fail" for c in checks)
