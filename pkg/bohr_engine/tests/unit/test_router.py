"""
Unit tests for the problem router
"""

import pytest

from app.exceptions import InvalidParameterError
from app.problems import ConvexCombinationProblem, NonnegPolynomial, UnivalentSecondOrderProblem


class TestProblemRouter:

    def test_route_integer_params(self, router):
        problem = router.route('T31', ['m=1', 'p=2'])
        assert problem.params() == {'m': 1, 'p': 2}
        assert problem.operator_flavor == 'D'

    def test_ids_are_case_insensitive(self, router):
        assert router.route(' t42 ', ['m=1', 'lambda=0.5']).problem_id == 'T42'

    def test_lambda_is_real(self, router):
        problem = router.route('T42', ['m=2', 'lambda=0.25'])
        assert isinstance(problem, ConvexCombinationProblem)
        assert problem.params()['lambda'] == 0.25

    def test_polynomial(self, router):
        problem = router.route('T51', ['m=1', 'poly=1.7777778,18.6095'])
        assert problem.params()['poly'] == NonnegPolynomial((1.7777778, 18.6095))

    def test_default_start_index(self, router):
        problem = router.route('T43', ['m=1', 'p=1'])
        assert isinstance(problem, UnivalentSecondOrderProblem)
        assert problem.params()['N'] == 2

    def test_flavor(self, router):
        assert router.route('T33', ['s=2', 'm=1', 'p=1', 'q=1', 'flavor=Dscript']).operator_flavor == 'Dscript'

    def test_assignments_keep_flavor_text(self, router):
        assert router.parse_assignments('T31', ['m=3', 'flavor=D']) == {'m': 3, 'flavor': 'D'}

    @pytest.mark.parametrize('problem_id,assignments', [
        ('T99', ['m=1']),
        ('T31', ['m=1']),
        ('T31', ['m=1', 'p=x']),
        ('T31', ['m=1', 'p=1.5']),
        ('T31', ['m=1', 'p=1', 'p=2']),
        ('T31', ['m', 'p=1']),
        ('T31', ['=1', 'p=1']),
        ('T31', ['m=1', 'p=1', 'lambda=0.5']),
        ('T41', ['m=1']),
        ('T41', ['m=1', 'lambda=nan']),
        ('T42', ['m=1', 'lambda=2']),
        ('T51', ['m=1', 'poly=1,,2']),
        ('T51', ['m=1', 'poly=a,b']),
        ('T51', ['m=1', 'poly=-1']),
        ('T31', ['m=1', 'p=1', 'flavor=X'])
    ])
    def test_rejected(self, router, problem_id, assignments):
        with pytest.raises(InvalidParameterError):
            router.route(problem_id, assignments)

    def test_available_problems(self, router):
        problems = router.get_available_problems()
        assert [info['problem'] for info in problems] == [
            'T31', 'T32', 'T33', 'T34', 'T41', 'T42', 'T43', 'T44', 'T51'
        ]
        second_order = next(info for info in problems if info['problem'] == 'T44')
        assert second_order['params'] == ['m', 'p', 'N']
        assert second_order['defaults'] == {'N': 2}
        assert second_order['mapping_class'] == 'SHC'
        assert second_order['target'] == 0.5
