"""
Base Problem Class - Template for all Bohr radius problems
"""

import logging
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Dict, Tuple

import numpy as np

from config import PROBLEM_CONFIGURATIONS

from ..exceptions import InvalidParameterError
from ..extremal_maps import HALF_PLANE, KOEBE, ExtremalMap
from ..series_kernels import require_radius


OPERATOR_FLAVORS = ('D', 'Dscript')


@dataclass(frozen=True)
class MappingClassProfile:
    """Coefficient bound c_n, distance floor and extremal map of a mapping class."""

    kind: str
    distance_floor: float
    extremal: ExtremalMap

    def coeff_bound(self, n: int) -> float:
        return self.extremal.coefficient_bound(n)

    def coefficient_bounds(self, order: int) -> np.ndarray:
        """c_1..c_order as an array."""
        return np.arange(1, order + 1, dtype=float) ** self.extremal.shift


STABLE_UNIVALENT = MappingClassProfile('SHU', 0.25, KOEBE)
STABLE_CONVEX = MappingClassProfile('SHC', 0.5, HALF_PLANE)

PROFILES = {
    'SHU': STABLE_UNIVALENT,
    'SHC': STABLE_CONVEX
}


@dataclass(frozen=True)
class NonnegPolynomial:
    """P(t) = a_1 t + ... + a_k t^k with a_i >= 0, not identically zero."""

    coefficients: Tuple[float, ...]

    def __post_init__(self):
        try:
            values = tuple(float(a) for a in self.coefficients)
        except (TypeError, ValueError):
            raise InvalidParameterError(f"polynomial coefficients must be reals, got {self.coefficients!r}")
        if not values:
            raise InvalidParameterError("polynomial needs at least one coefficient")
        if any(not math.isfinite(a) or a < 0.0 for a in values):
            raise InvalidParameterError(f"polynomial coefficients must be finite and >= 0, got {values}")
        if not any(a > 0.0 for a in values):
            raise InvalidParameterError("polynomial must have a positive coefficient")
        object.__setattr__(self, 'coefficients', values)

    @property
    def degree(self) -> int:
        return len(self.coefficients)

    def __call__(self, t: float) -> float:
        return math.fsum(a * t ** i for i, a in enumerate(self.coefficients, start=1))

    def evaluate_array(self, t: np.ndarray) -> np.ndarray:
        out = np.zeros_like(t, dtype=float)
        for i, a in enumerate(self.coefficients, start=1):
            out = out + a * t ** i
        return out

    def label(self) -> str:
        return ','.join(format(a, '.12g') for a in self.coefficients)


@dataclass(frozen=True)
class GapEvaluation:
    r: float
    value: float


class BaseProblem(ABC):
    """
    Abstract base class for the radius problems.

    Each problem owns a gap function G(r) = lhs(r) - target, where lhs is the
    worst case of the left-hand side of its Bohr inequality over the mapping
    class with |omega_j(z)| = |z|^j. G is negative at 0, strictly increasing
    and diverges at 1, so it has a single root on (0, 1).
    """

    problem_id: str = ''
    advisory: bool = False

    def __init__(self, params: Dict[str, Any], operator_flavor: str = 'D'):
        self.configuration = PROBLEM_CONFIGURATIONS[self.problem_id]
        self.profile = PROFILES[self.configuration['mapping_class']]
        if operator_flavor not in OPERATOR_FLAVORS:
            raise InvalidParameterError(
                f"operator flavor must be one of {OPERATOR_FLAVORS}, got {operator_flavor!r}"
            )
        self.operator_flavor = operator_flavor
        self._params = self._validate(dict(params))
        self.logger = logging.getLogger(f"problem.{self.problem_id.lower()}")

    def _validate(self, params: Dict[str, Any]) -> Dict[str, Any]:
        names = self.configuration['params']
        unknown = sorted(set(params) - set(names))
        if unknown:
            raise InvalidParameterError(
                f"{self.problem_id} does not take parameter(s) {', '.join(unknown)}; expected {', '.join(names)}"
            )

        merged = dict(self.configuration['defaults'])
        merged.update(params)
        missing = [name for name in names if name not in merged]
        if missing:
            raise InvalidParameterError(f"{self.problem_id} requires parameter(s) {', '.join(missing)}")

        validated = {}
        for name in names:
            value = merged[name]
            if name in self.configuration['integer_params']:
                minimum = 2 if name == 'N' else 1
                if isinstance(value, bool) or not isinstance(value, (int, np.integer)) or value < minimum:
                    raise InvalidParameterError(f"{name} must be an integer >= {minimum}, got {value!r}")
                value = int(value)
            elif name == 'lambda':
                if isinstance(value, bool):
                    raise InvalidParameterError(f"lambda must be a real in [0, 1], got {value!r}")
                try:
                    value = float(value)
                except (TypeError, ValueError):
                    raise InvalidParameterError(f"lambda must be a real in [0, 1], got {value!r}")
                if not 0.0 <= value <= 1.0:
                    raise InvalidParameterError(f"lambda must lie in [0, 1], got {value!r}")
            elif name == 'poly':
                if not isinstance(value, NonnegPolynomial):
                    value = NonnegPolynomial(tuple(value))
            validated[name] = value
        return validated

    def target(self) -> float:
        """Right-hand side of the Bohr inequality (1/4, 1/2 or 1)."""
        return float(self.configuration['target'])

    @abstractmethod
    def _class_lhs(self, r: float) -> float:
        """Left-hand side composed from the class coefficient bounds."""

    @abstractmethod
    def _extremal_lhs(self, extremal: ExtremalMap, r: float) -> float:
        """Left-hand side evaluated on an extremal map with omega_j(z) = z^j."""

    @abstractmethod
    def sample_lhs(self, a_abs: np.ndarray, b_abs: np.ndarray, r: float) -> np.ndarray:
        """
        Left-hand side for a batch of coefficient moduli.

        Args:
            a_abs: |a_n|, shape (trials, K), column n-1 holds n
            b_abs: |b_n|, same shape
            r: Modulus |z|

        Returns:
            Array of shape (trials,)
        """

    def lhs_class_bound(self, r: float) -> float:
        return self._class_lhs(require_radius(r))

    def evaluate_gap(self, r: float) -> float:
        """G(r) = lhs_class_bound(r) - target."""
        return self.lhs_class_bound(r) - self.target()

    def gap(self, r: float) -> GapEvaluation:
        r = require_radius(r)
        return GapEvaluation(r=r, value=self.evaluate_gap(r))

    def lhs_extremal(self, r: float) -> float:
        return self._extremal_lhs(self.profile.extremal, require_radius(r))

    def lhs_pair(self, r: float) -> Tuple[float, float]:
        """(class bound, extremal value) at r."""
        return self.lhs_class_bound(r), self.lhs_extremal(r)

    def params(self) -> Dict[str, Any]:
        return dict(self._params)

    def with_params(self, **changes) -> 'BaseProblem':
        params = self.params()
        params.update(changes)
        return type(self)(params, operator_flavor=self.operator_flavor)

    def label(self) -> str:
        parts = [self.problem_id]
        for name, value in self._params.items():
            if isinstance(value, NonnegPolynomial):
                value = value.label()
            elif isinstance(value, float):
                value = format(value, '.12g')
            parts.append(f"{name}={value}")
        if self.operator_flavor != 'D':
            parts.append(f"flavor={self.operator_flavor}")
        return ' '.join(parts)

    def to_dict(self) -> Dict[str, Any]:
        params = {}
        for name, value in self._params.items():
            params[name] = list(value.coefficients) if isinstance(value, NonnegPolynomial) else value
        return {
            'problem': self.problem_id,
            'params': params,
            'operator_flavor': self.operator_flavor
        }

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.label()}>"

    @staticmethod
    def _weighted_rows(c: np.ndarray, x: float, weight_exponent: int = 0, start: int = 1) -> np.ndarray:
        # sum_{n >= start} n^alpha c_n x^n per row
        order = c.shape[1]
        n = np.arange(1, order + 1, dtype=float)
        terms = c * n ** weight_exponent * x ** n
        return terms[:, start - 1:].sum(axis=1)
