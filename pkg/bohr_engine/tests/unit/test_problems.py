"""
Unit tests for the radius problems and their gap functions
"""

import math

import hypothesis.strategies as st
import numpy as np
import pytest
from hypothesis import assume, given

from config import REFERENCE_TABLES, SHARPNESS_DEFAULTS
from app.exceptions import DomainError, InvalidParameterError
from app.problems import (
    PROBLEM_CLASSES,
    STABLE_CONVEX,
    STABLE_UNIVALENT,
    NonnegPolynomial,
    UnivalentOperatorMajorantProblem
)
from app.series_kernels import WeightedGeometricSeries, partial_sum


TABLE_CASES = [
    (table['problem'], params)
    for table in REFERENCE_TABLES.values()
    for params, _ in table['rows']
]
DEFAULT_CASES = list(SHARPNESS_DEFAULTS.items())
ALL_CASES = TABLE_CASES + DEFAULT_CASES


def case_id(case):
    problem_id, params = case
    return problem_id + '-' + '-'.join(str(value) for value in params.values())


class TestTargets:

    @pytest.mark.parametrize('problem_id,target', [
        ('T31', 0.25), ('T32', 0.5), ('T33', 1.0), ('T34', 1.0),
        ('T41', 0.25), ('T42', 0.5), ('T43', 0.25), ('T44', 0.5), ('T51', 0.25)
    ])
    def test_target(self, router, problem_id, target):
        params = dict(SHARPNESS_DEFAULTS.get(problem_id, {}))
        if not params:
            params = next(p for pid, p in TABLE_CASES if pid == problem_id)
        assert router.build(problem_id, params).target() == target

    @pytest.mark.parametrize('case', ALL_CASES, ids=case_id)
    def test_gap_at_origin(self, router, case):
        problem = router.build(*case)
        assert problem.evaluate_gap(0.0) == -problem.target()

    def test_registry_covers_every_problem(self):
        assert sorted(PROBLEM_CLASSES) == ['T31', 'T32', 'T33', 'T34', 'T41', 'T42', 'T43', 'T44', 'T51']


class TestGapValues:

    def test_first_table_row_is_near_root(self, build):
        assert abs(build('T31', m=1, p=1).evaluate_gap(0.0932)) <= 1e-4

    def test_convex_power_row_is_near_root(self, build):
        assert abs(build('T34', s=2, m=1, p=1, q=1).evaluate_gap(0.3262)) <= 1e-3

    def test_area_problem_against_partial_sums(self, build):
        r = 0.05
        problem = build('T51', m=1, poly=(1.0,))
        expected = (partial_sum(WeightedGeometricSeries(1, 1, r), 300)
                    + partial_sum(WeightedGeometricSeries(5, 1, r * r), 300) - 0.25)
        assert problem.evaluate_gap(r) == pytest.approx(expected, rel=1e-12)

    def test_convex_combination_with_full_derivative(self, build):
        # t / (1 - t)^2 = 1/2 at t = 2 - sqrt(3)
        problem = build('T42', m=1, lam=1.0)
        assert problem.lhs_class_bound(2.0 - math.sqrt(3.0)) == pytest.approx(0.5, abs=1e-12)

    @pytest.mark.parametrize('problem_id,base', [('T41', 5.0), ('T42', 3.0)])
    @pytest.mark.parametrize('m', [1, 2, 3])
    def test_growth_only_combination(self, build, problem_id, base, m):
        problem = build(problem_id, m=m, lam=0.0)
        assert problem.evaluate_gap(base ** (-1.0 / m)) == pytest.approx(0.0, abs=1e-14)

    def test_second_order_start_index(self, build):
        r = 0.2
        n2 = build('T43', m=1, p=1, N=2).lhs_class_bound(r)
        n3 = build('T43', m=1, p=1, N=3).lhs_class_bound(r)
        assert n2 - n3 == pytest.approx(2 * r ** 2, rel=1e-10)

    def test_second_order_defaults_to_two(self, build):
        problem = build('T44', m=2, p=1)
        assert problem.params()['N'] == 2
        assert problem.lhs_class_bound(0.3) == build('T44', m=2, p=1, N=2).lhs_class_bound(0.3)

    def test_gap_record(self, build):
        evaluation = build('T32', m=1, p=1).gap(0.1)
        assert evaluation.r == 0.1
        assert evaluation.value == build('T32', m=1, p=1).evaluate_gap(0.1)

    @pytest.mark.parametrize('r', [-0.01, 1.0, float('inf')])
    def test_outside_domain(self, build, r):
        with pytest.raises(DomainError):
            build('T31', m=1, p=1).evaluate_gap(r)

    @given(st.floats(0.001, 0.99), st.floats(0.001, 0.99))
    def test_increasing(self, r1, r2):
        assume(abs(r1 - r2) > 1e-6)
        problem = PROBLEM_CLASSES['T34']({'s': 2, 'm': 1, 'p': 1, 'q': 1})
        lo, hi = min(r1, r2), max(r1, r2)
        assert problem.evaluate_gap(lo) < problem.evaluate_gap(hi)


class TestExtremalAgreement:

    @pytest.mark.parametrize('case', [c for c in ALL_CASES if c[0] != 'T41'], ids=case_id)
    @pytest.mark.parametrize('r', [0.05, 0.2, 0.4])
    def test_extremal_attains_class_bound(self, router, case, r):
        class_value, extremal_value = router.build(*case).lhs_pair(r)
        assert extremal_value == pytest.approx(class_value, rel=1e-12)

    def test_koebe_growth_exceeds_combination_bound(self, build):
        problem = build('T41', m=1, lam=0.5)
        assert problem.advisory
        assert problem.lhs_extremal(0.2) > problem.lhs_class_bound(0.2)

    def test_combination_agrees_at_full_derivative(self, build):
        class_value, extremal_value = build('T41', m=2, lam=1.0).lhs_pair(0.3)
        assert extremal_value == pytest.approx(class_value, rel=1e-12)

    @pytest.mark.parametrize('case', ALL_CASES, ids=case_id)
    def test_operator_flavor_leaves_values_unchanged(self, router, case):
        problem_id, params = case
        plain = router.build(problem_id, params)
        twin = router.build(problem_id, {**params, 'flavor': 'Dscript'})
        assert twin.operator_flavor == 'Dscript'
        assert twin.lhs_pair(0.15) == plain.lhs_pair(0.15)


class TestSampledLeftHandSide:

    @pytest.mark.parametrize('case', [c for c in ALL_CASES if c[0] != 'T41'], ids=case_id)
    def test_extremal_coefficients_reach_class_bound(self, router, case):
        problem = router.build(*case)
        bounds = problem.profile.coefficient_bounds(40)[None, :]
        a_abs = np.repeat(bounds, 2, axis=0)
        b_abs = np.zeros_like(a_abs)
        lhs = problem.sample_lhs(a_abs, b_abs, 0.1)
        assert lhs.shape == (2,)
        assert lhs[0] == pytest.approx(problem.lhs_class_bound(0.1), rel=1e-12)

    @pytest.mark.parametrize('case', [c for c in ALL_CASES if c[0] != 'T41'], ids=case_id)
    def test_admissible_coefficients_stay_below(self, router, case):
        problem = router.build(*case)
        bounds = problem.profile.coefficient_bounds(40)
        a_abs = (0.6 * bounds)[None, :]
        b_abs = (0.3 * bounds)[None, :]
        a_abs[:, 0], b_abs[:, 0] = 1.0, 0.0
        assert problem.sample_lhs(a_abs, b_abs, 0.2)[0] <= problem.lhs_class_bound(0.2)


class TestValidation:

    @pytest.mark.parametrize('problem_id,params', [
        ('T31', {'m': 1}),
        ('T31', {'m': 1, 'p': 1, 'q': 1}),
        ('T31', {'m': 0, 'p': 1}),
        ('T31', {'m': True, 'p': 1}),
        ('T31', {'m': 1.5, 'p': 1}),
        ('T33', {'s': 2, 'm': 1, 'p': 1, 'q': -1}),
        ('T43', {'m': 1, 'p': 1, 'N': 1}),
        ('T41', {'m': 1}),
        ('T41', {'m': 1, 'lambda': 1.5}),
        ('T42', {'m': 1, 'lambda': -0.1}),
        ('T42', {'m': 1, 'lambda': 'half'}),
        ('T51', {'m': 1, 'poly': (-1.0, 2.0)}),
        ('T51', {'m': 1, 'poly': (0.0, 0.0)}),
        ('T51', {'m': 1, 'poly': ()})
    ])
    def test_rejected(self, problem_id, params):
        with pytest.raises(InvalidParameterError):
            PROBLEM_CLASSES[problem_id](params)

    def test_unknown_flavor(self):
        with pytest.raises(InvalidParameterError):
            UnivalentOperatorMajorantProblem({'m': 1, 'p': 1}, operator_flavor='E')

    def test_numpy_integers_accepted(self):
        problem = UnivalentOperatorMajorantProblem({'m': np.int64(2), 'p': 1})
        assert problem.params() == {'m': 2, 'p': 1}
        assert type(problem.params()['m']) is int


class TestDescriptions:

    def test_label(self, build, router):
        assert build('T31', m=1, p=2).label() == 'T31 m=1 p=2'
        assert router.build('T31', {'m': 1, 'p': 2, 'flavor': 'Dscript'}).label() == 'T31 m=1 p=2 flavor=Dscript'
        assert build('T42', m=1, lam=0.25).label() == 'T42 m=1 lambda=0.25'
        assert build('T51', m=1, poly=(16.0 / 9.0, 18.6095)).label() == 'T51 m=1 poly=1.77777777778,18.6095'

    def test_to_dict(self, build):
        assert build('T51', m=2, poly=(1.0, 2.0)).to_dict() == {
            'problem': 'T51',
            'params': {'m': 2, 'poly': [1.0, 2.0]},
            'operator_flavor': 'D'
        }

    def test_with_params(self, build):
        problem = build('T33', s=2, m=1, p=1, q=1)
        changed = problem.with_params(s=3)
        assert changed.params()['s'] == 3
        assert problem.params()['s'] == 2
        assert isinstance(changed, type(problem))

    def test_repr(self, build):
        assert repr(build('T32', m=2, p=1)) == '<ConvexOperatorMajorantProblem T32 m=2 p=1>'


class TestSupportTypes:

    def test_polynomial(self):
        poly = NonnegPolynomial((1.0, 0.0, 2.0))
        assert poly.degree == 3
        assert poly(0.5) == pytest.approx(0.75, rel=1e-15)
        assert list(poly.evaluate_array(np.array([0.0, 1.0]))) == [0.0, 3.0]
        assert poly.label() == '1,0,2'

    def test_polynomial_coerces_entries(self):
        assert NonnegPolynomial([1, 2]).coefficients == (1.0, 2.0)

    def test_class_profiles(self):
        assert STABLE_UNIVALENT.coeff_bound(5) == 5.0
        assert STABLE_UNIVALENT.distance_floor == 0.25
        assert list(STABLE_UNIVALENT.coefficient_bounds(3)) == [1.0, 2.0, 3.0]
        assert STABLE_CONVEX.coeff_bound(5) == 1.0
        assert STABLE_CONVEX.distance_floor == 0.5
        assert list(STABLE_CONVEX.coefficient_bounds(3)) == [1.0, 1.0, 1.0]
