"""Ratio convergence diagnostics and root identities."""

import pytest

import goldenseq as gs

GOLDEN = 1.618033988749895


def _conv(coeffs, seeds, **kwargs):
    return gs.ratio_convergence(gs.make_spec(coeffs), gs.make_seeds(seeds), **kwargs)


def test_fibonacci_ratios_reach_golden_ratio():
    report = _conv([1, 1], [0, 1], k_max=60)
    assert report.converged
    assert report.hypothesis_met
    assert report.final_estimate == pytest.approx(GOLDEN, abs=1e-10)
    assert report.abs_error <= 1e-8
    assert report.reason is None
    assert report.k_used == 60


def test_ratios_are_exactly_formed():
    report = _conv([1, 1], [0, 1], k_max=5)
    # x_1/x_0 undefined (x_0 = 0); usable ratios start at k = 1
    assert report.ratios == (1.0, 2.0, 1.5, 5 / 3, 1.6)


def test_tied_dominance_is_diagnosed():
    report = _conv([-1, 0], [0, 1])  # x^2 = -1, roots +-i
    assert not report.converged
    assert not report.hypothesis_met
    assert "tie" in report.reason
    assert abs(report.target) == pytest.approx(1.0, abs=1e-12)


def test_zero_dominant_weight_is_diagnosed():
    # roots are 2 and -1; these seeds select the pure (-1)^k solution
    report = _conv([2, 1], [1, -1])
    assert not report.converged
    assert not report.hypothesis_met
    assert "zero weight" in report.reason
    assert report.final_estimate == pytest.approx(-1.0, abs=1e-12)


def test_all_zero_seeds_rejected():
    with pytest.raises(ValueError):
        _conv([1, 1], [0, 0])


def test_k_max_validation():
    with pytest.raises(ValueError):
        _conv([1, 1], [0, 1], k_max=0)


def test_zero_terms_are_skipped_not_divided():
    # x_{k+2} = x_k with seeds (0, 1): every even-indexed term is zero
    report = _conv([1, 0], [0, 1])
    assert report.ratios == (0.0,) * len(report.ratios)
    assert not report.converged  # roots +-1 tie anyway
    assert not report.hypothesis_met


def test_identity_report_quadratic_includes_reciprocal():
    spec = gs.make_spec([1, 1])
    report = gs.golden_identity_check(spec, gs.solve_roots(spec))
    names = [name for name, _ in report.residuals]
    assert names == ["defining[0]", "defining[1]", "reciprocal[0]", "reciprocal[1]"]
    assert report.passed
    assert report.skipped == ()


def test_identity_report_skips_reciprocal_when_undefined():
    spec = gs.make_spec([0, 1])  # constant coefficient 0
    report = gs.golden_identity_check(spec, gs.solve_roots(spec))
    names = [name for name, _ in report.residuals]
    assert names == ["defining[0]", "defining[1]"]
    assert len(report.skipped) == 1
    assert "divides by zero" in report.skipped[0]
    assert report.passed


def test_identity_report_cubic_defining_only():
    spec = gs.make_spec([1, 1, 1])
    report = gs.golden_identity_check(spec, gs.solve_roots(spec))
    assert [name for name, _ in report.residuals] == [
        "defining[0]",
        "defining[1]",
        "defining[2]",
    ]
    assert report.passed


def test_identity_degree_mismatch_rejected():
    spec2 = gs.make_spec([1, 1])
    rs3 = gs.solve_roots(gs.make_spec([1, 1, 1]))
    with pytest.raises(ValueError):
        gs.golden_identity_check(spec2, rs3)


def test_recover_cubic_conjugates_from_ratio_limit():
    spec = gs.make_spec([1, 1, 1])
    seeds = gs.make_seeds([0, 1, 1])
    limit = gs.ratio_convergence(spec, seeds).final_estimate
    pair = gs.recover_cubic_conjugates(1, 1, limit)
    rs = gs.solve_roots(spec)
    others = [z for i, z in enumerate(rs.roots) if i != rs.dominant_index]
    direct = max(abs(pair[0] - others[0]), abs(pair[1] - others[1]))
    swapped = max(abs(pair[0] - others[1]), abs(pair[1] - others[0]))
    assert min(direct, swapped) <= 1e-6


def test_recover_cubic_conjugates_real_case():
    # x^3 = 6x^2 - 11x + 6 has roots 3, 2, 1; feed the true dominant root
    pair = gs.recover_cubic_conjugates(6, 6, 3.0)
    values = sorted([pair[0].real, pair[1].real])
    assert values[0] == pytest.approx(1, abs=1e-9)
    assert values[1] == pytest.approx(2, abs=1e-9)


def test_recover_rejects_zero_limit():
    with pytest.raises(ValueError):
        gs.recover_cubic_conjugates(1, 1, 0.0)
