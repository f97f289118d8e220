"""
Problem Router - Routes a problem id and key=value parameters to a radius problem
"""

import logging
import math
from typing import Any, Dict, List, Sequence

from config import PROBLEM_CONFIGURATIONS

from .exceptions import InvalidParameterError
from .problems import PROBLEM_CLASSES, BaseProblem, NonnegPolynomial


class ProblemRouter:
    """
    Builds radius problems from command-line style parameter assignments
    and describes the available problems.
    """

    def __init__(self):
        self.problems = dict(PROBLEM_CLASSES)
        self.logger = logging.getLogger('problem_router')
        self.logger.debug(f"Initialized {len(self.problems)} radius problems")

    def parse_value(self, problem_id: str, name: str, text: str) -> Any:
        """
        Convert the text of one assignment to the parameter's type.

        Args:
            problem_id: Problem the parameter belongs to
            name: Parameter name (m, p, q, s, N, lambda, poly)
            text: Raw value

        Returns:
            int for order parameters, float for lambda, NonnegPolynomial for poly
        """
        configuration = PROBLEM_CONFIGURATIONS[problem_id]
        text = text.strip()

        if name in configuration['integer_params']:
            try:
                return int(text)
            except ValueError:
                raise InvalidParameterError(f"{name} must be an integer, got {text!r}")

        if name == 'lambda':
            try:
                value = float(text)
            except ValueError:
                raise InvalidParameterError(f"lambda must be a real number, got {text!r}")
            if not math.isfinite(value):
                raise InvalidParameterError(f"lambda must be finite, got {text!r}")
            return value

        if name == 'poly':
            entries = text.split(',')
            if any(not entry.strip() for entry in entries):
                raise InvalidParameterError(f"poly has an empty coefficient: {text!r}")
            try:
                coefficients = tuple(float(entry) for entry in entries)
            except ValueError:
                raise InvalidParameterError(f"poly coefficients must be real numbers, got {text!r}")
            return NonnegPolynomial(coefficients)

        raise InvalidParameterError(
            f"{problem_id} does not take parameter {name!r}; "
            f"expected {', '.join(configuration['params'])}"
        )

    def parse_assignments(self, problem_id: str, assignments: Sequence[str]) -> Dict[str, Any]:
        """Parse `key=value` strings; `flavor=D|Dscript` is returned under 'flavor'."""
        problem_id = self._resolve_id(problem_id)
        params: Dict[str, Any] = {}
        for assignment in assignments:
            name, sep, text = assignment.partition('=')
            name = name.strip()
            if not sep or not name:
                raise InvalidParameterError(f"expected key=value, got {assignment!r}")
            if name in params:
                raise InvalidParameterError(f"parameter {name!r} given twice")
            params[name] = text.strip() if name == 'flavor' else self.parse_value(problem_id, name, text)
        return params

    def build(self, problem_id: str, params: Dict[str, Any]) -> BaseProblem:
        """
        Instantiate a problem from typed parameters.

        Args:
            problem_id: One of T31..T34, T41..T44, T51
            params: Parameter values; an optional 'flavor' entry selects D or Dscript

        Returns:
            The validated problem
        """
        problem_id = self._resolve_id(problem_id)
        params = dict(params)
        flavor = params.pop('flavor', 'D')
        problem = self.problems[problem_id](params, operator_flavor=flavor)
        self.logger.debug(f"Built problem {problem.label()}")
        return problem

    def route(self, problem_id: str, assignments: Sequence[str]) -> BaseProblem:
        """Parse assignments and build the problem in one step."""
        return self.build(problem_id, self.parse_assignments(problem_id, assignments))

    def get_available_problems(self) -> List[Dict[str, Any]]:
        """
        Get information about all available problems.

        Returns:
            List of problem information dictionaries
        """
        return [
            {
                'problem': problem_id,
                'name': configuration['name'],
                'mapping_class': configuration['mapping_class'],
                'params': list(configuration['params']),
                'defaults': dict(configuration['defaults']),
                'target': configuration['target']
            }
            for problem_id, configuration in PROBLEM_CONFIGURATIONS.items()
        ]

    def _resolve_id(self, problem_id: str) -> str:
        key = str(problem_id).strip().upper()
        if key not in self.problems:
            raise InvalidParameterError(
                f"unknown problem {problem_id!r}; expected one of {', '.join(self.problems)}"
            )
        return key
