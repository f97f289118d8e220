"""
Unit tests for the verification suites
"""

import math

import numpy as np
import pytest

from config import REFERENCE_TABLES
from app.exceptions import InvalidParameterError
from app.verification import (
    IDENTITY_PAIRS,
    SUITES,
    CheckEntry,
    SuiteReport
)


class TestTables:

    @pytest.mark.parametrize('table_id', sorted(REFERENCE_TABLES))
    def test_every_row_reproduced(self, verifier, table_id):
        rows = verifier.reproduce_table(table_id)
        assert [row.expected_radius for row in rows] == [expected for _, expected in REFERENCE_TABLES[table_id]['rows']]
        assert all(row.passed for row in rows)
        assert all(row.residual <= 1e-10 for row in rows)

    def test_misprinted_rows_keep_printed_value(self, verifier):
        rows = verifier.reproduce_table('3.2')
        assert not rows[0].erratum
        assert rows[1].erratum
        assert rows[1].expected_radius == 0.3869
        assert rows[1].reference_radius == 0.286876
        assert rows[1].abs_delta == abs(rows[1].computed_radius - 0.286876)
        assert rows[1].passed

    def test_golden_row(self, verifier):
        row = verifier.reproduce_table('3.4')[2]
        assert row.erratum
        assert row.computed_radius == pytest.approx((math.sqrt(5.0) - 1.0) / 2.0, abs=1e-5)

    def test_row_entry(self, verifier):
        entry = verifier.reproduce_table('3.1')[0].to_entry()
        assert entry.case == 'table 3.1 T31 m=1 p=1'
        assert entry.details['expected'] == 0.0932
        assert entry.passed

    def test_unknown_table(self, verifier):
        with pytest.raises(InvalidParameterError):
            verifier.reproduce_table('9')


class TestSharpness:

    def test_holds_below_and_fails_above(self, verifier, build):
        report = verifier.sharpness_scan(build('T31', m=1, p=1), 1e-3)
        assert report.holds_below and report.fails_above
        assert report.value_below < 0.25 < report.value_above
        assert not report.advisory

    def test_explicit_radius(self, verifier, build):
        report = verifier.sharpness_scan(build('T31', m=1, p=1), 1e-2, radius=0.0932)
        assert report.radius == 0.0932
        assert report.passed

    def test_combination_is_advisory(self, verifier, build, caplog):
        report = verifier.sharpness_scan(build('T41', m=1, lam=0.5), 1e-3)
        assert report.advisory
        assert report.to_entry().advisory
        assert 'advisory' in caplog.text

    @pytest.mark.parametrize('epsilon', [0.0, 0.02, -1e-3])
    def test_epsilon_range(self, verifier, build, epsilon):
        with pytest.raises(InvalidParameterError):
            verifier.sharpness_scan(build('T31', m=1, p=1), epsilon)

    def test_suite(self, verifier):
        report = verifier.sharpness_suite()
        assert report.name == 'sharpness'
        assert len(report.entries) == 2 * len(verifier.scan_problems())
        assert report.passed
        assert any(entry.advisory for entry in report.entries)
        assert all(entry.passed for entry in report.entries if not entry.advisory)


class TestIdentities:

    def test_suite(self, verifier):
        report = verifier.identity_suite()
        assert report.passed
        assert len(report.entries) == len(IDENTITY_PAIRS) * 10

    def test_origin_rows_are_exact(self, verifier):
        report = verifier.identity_suite([0.0])
        assert all(entry.metric == 0.0 for entry in report.entries)

    def test_grid_range(self, verifier):
        with pytest.raises(InvalidParameterError):
            verifier.identity_suite([0.5, 0.95])


class TestSampling:

    def test_no_violations_at_radius(self, verifier, build):
        report = verifier.sample_class_inequality(build('T31', m=1, p=1), 500, seed=0)
        assert report.violations == 0
        assert report.max_lhs <= 0.25
        assert report.passed

    def test_coefficients_respect_class(self, verifier, build):
        problem = build('T32', m=1, p=1)
        a_abs, b_abs = verifier.sample_coefficients(problem, 100, np.random.default_rng(1))
        assert a_abs.shape == (100, verifier.cfg.SAMPLING_TERMS)
        assert (a_abs[:, 0] == 1.0).all() and (b_abs[:, 0] == 0.0).all()
        assert (b_abs <= a_abs).all()
        assert (a_abs + b_abs <= 1.0 + 1e-15).all()

    def test_seeded_streams(self, verifier, build):
        problem = build('T34', s=2, m=1, p=1, q=1)
        first = verifier.sample_class_inequality(problem, 200, seed=7)
        again = verifier.sample_class_inequality(problem, 200, seed=7)
        other = verifier.sample_class_inequality(problem, 200, seed=7, stream=1)
        assert first.max_lhs == again.max_lhs
        assert first.max_lhs != other.max_lhs

    def test_trials(self, verifier, build):
        with pytest.raises(InvalidParameterError):
            verifier.sample_class_inequality(build('T31', m=1, p=1), 0, seed=0)

    @pytest.mark.slow
    @pytest.mark.parametrize('table_id', sorted(REFERENCE_TABLES))
    def test_table_rows_over_five_seeds(self, verifier, router, table_id):
        table = REFERENCE_TABLES[table_id]
        for params, _ in table['rows']:
            problem = router.build(table['problem'], params)
            for seed in range(5):
                report = verifier.sample_class_inequality(problem, 10000, seed=seed)
                assert report.violations == 0, (problem.label(), seed)

    def test_suite(self, verifier):
        report = verifier.sampling_suite(seed=3, trials=300)
        assert report.passed
        assert len(report.entries) == len(verifier.scan_problems())


class TestAreaCrossCheck:

    def test_default_radii(self, verifier):
        report = verifier.area_crosscheck()
        assert report.passed
        assert len(report.entries) == 5
        assert all(entry.metric <= 1e-6 for entry in report.entries)

    def test_classical_area_is_reported(self, verifier):
        entry = verifier.area_crosscheck([0.25]).entries[0]
        assert entry.details['closed_form'] == pytest.approx(entry.details['series'], rel=1e-12)
        assert entry.details['classical_area'] < entry.details['series']

    def test_radius_range(self, verifier):
        with pytest.raises(InvalidParameterError):
            verifier.area_crosscheck([0.7])


class TestAreaPolynomialExample:

    def test_case(self, verifier):
        report = verifier.theorem51_case()
        assert report.passed
        assert len(report.entries) == 5

    def test_probe_above_radius_fails(self, verifier):
        report = verifier.theorem51_case(r_probe=0.16)
        assert not report.passed
        assert report.failures == 1

    @pytest.mark.parametrize('r_probe', [1.5, -0.1, math.nan])
    def test_probe_outside_domain_is_a_failed_entry(self, verifier, r_probe):
        report = verifier.theorem51_case(r_probe=r_probe)
        assert report.failures == 1
        entry = report.entries[3]
        assert not entry.passed
        assert 'error' in entry.details


class TestMonotoneAndReductions:

    def test_random_parameter_sets(self, verifier):
        report = verifier.monotone_suite(count=18, seed=5)
        assert len(report.entries) == 18
        assert report.passed

    def test_random_problems_cover_registry(self, verifier):
        rng = np.random.default_rng(0)
        ids = {verifier.random_problem(index, rng).problem_id for index in range(9)}
        assert ids == set(verifier.router.problems)

    def test_count(self, verifier):
        with pytest.raises(InvalidParameterError):
            verifier.monotone_suite(count=0)

    def test_reductions(self, verifier):
        report = verifier.closed_form_reductions()
        assert report.passed
        assert len(report.entries) == 8


class TestReports:

    def test_advisory_failures_are_not_counted(self):
        report = SuiteReport('demo', [
            CheckEntry('a', 1.0, True),
            CheckEntry('b', 1.0, False, advisory=True)
        ])
        assert report.passed
        assert report.to_dict()['failures'] == 0
        report.entries.append(CheckEntry('c', 1.0, False))
        assert not report.passed

    def test_run_dispatch(self, verifier):
        reports = verifier.run('reductions')
        assert [report.name for report in reports] == ['reductions']

    def test_unknown_suite(self, verifier):
        with pytest.raises(InvalidParameterError):
            verifier.run('everything')

    def test_suite_names(self):
        assert SUITES[:4] == ('identities', 'sharpness', 'sampling', 'area')
