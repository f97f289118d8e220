"""
Radius problems over stable harmonic convex mappings (|a_n| + |b_n| <= 1,
distance floor 1/2, half-plane extremal)
"""

import numpy as np

from ..extremal_maps import ExtremalMap, OperatorKind, first_order, second_order
from ..series_kernels import weighted_sum as S
from .base_problem import BaseProblem


class ConvexOperatorMajorantProblem(BaseProblem):
    """|Df(omega_m(z))| + M_f(|omega_p(z)|) <= 1/2."""

    problem_id = 'T32'

    def _class_lhs(self, r: float) -> float:
        m, p = self._params['m'], self._params['p']
        t, u = r ** m, r ** p
        return t + u + S(1, 2, t) + S(0, 2, u)

    def _extremal_lhs(self, extremal: ExtremalMap, r: float) -> float:
        m, p = self._params['m'], self._params['p']
        return (extremal.operator_value(first_order(self.operator_flavor), r ** m)
                + extremal.majorant_tail(1, r ** p))

    def sample_lhs(self, a_abs: np.ndarray, b_abs: np.ndarray, r: float) -> np.ndarray:
        c = a_abs + b_abs
        m, p = self._params['m'], self._params['p']
        return self._weighted_rows(c, r ** m, 1) + self._weighted_rows(c, r ** p)


class ConvexPowerProblem(BaseProblem):
    """|Df(omega_m(z))|^s + |f(omega_q(z))|^p <= 1."""

    problem_id = 'T34'

    def _class_lhs(self, r: float) -> float:
        s, m, p, q = (self._params[k] for k in ('s', 'm', 'p', 'q'))
        return S(1, 1, r ** m) ** s + S(0, 1, r ** q) ** p

    def _extremal_lhs(self, extremal: ExtremalMap, r: float) -> float:
        s, m, p, q = (self._params[k] for k in ('s', 'm', 'p', 'q'))
        operator = first_order(self.operator_flavor)
        return extremal.operator_value(operator, r ** m) ** s + extremal.value(r ** q) ** p

    def sample_lhs(self, a_abs: np.ndarray, b_abs: np.ndarray, r: float) -> np.ndarray:
        c = a_abs + b_abs
        s, m, p, q = (self._params[k] for k in ('s', 'm', 'p', 'q'))
        return self._weighted_rows(c, r ** m, 1) ** s + self._weighted_rows(c, r ** q) ** p


class ConvexCombinationProblem(BaseProblem):
    """|F_lambda(omega_m(z))| <= 1/2 with F_lambda = (1 - lambda) f + lambda Df."""

    problem_id = 'T42'

    def _class_lhs(self, r: float) -> float:
        m, lam = self._params['m'], self._params['lambda']
        t = r ** m
        return (1.0 - lam) * S(0, 1, t) + lam * S(1, 1, t)

    def _extremal_lhs(self, extremal: ExtremalMap, r: float) -> float:
        m, lam = self._params['m'], self._params['lambda']
        return extremal.operator_value(OperatorKind.flambda(lam), r ** m)

    def sample_lhs(self, a_abs: np.ndarray, b_abs: np.ndarray, r: float) -> np.ndarray:
        c = a_abs + b_abs
        m, lam = self._params['m'], self._params['lambda']
        t = r ** m
        return (1.0 - lam) * self._weighted_rows(c, t) + lam * self._weighted_rows(c, t, 1)


class ConvexSecondOrderProblem(BaseProblem):
    """|D^2 f(omega_m(z))| + sum_{n >= N} (|a_n| + |b_n|) |omega_p(z)|^n <= 1/2."""

    problem_id = 'T44'

    def _class_lhs(self, r: float) -> float:
        m, p, start = self._params['m'], self._params['p'], self._params['N']
        return S(2, 1, r ** m) + S(0, start, r ** p)

    def _extremal_lhs(self, extremal: ExtremalMap, r: float) -> float:
        m, p, start = self._params['m'], self._params['p'], self._params['N']
        return (extremal.operator_value(second_order(self.operator_flavor), r ** m)
                + extremal.majorant_tail(start, r ** p))

    def sample_lhs(self, a_abs: np.ndarray, b_abs: np.ndarray, r: float) -> np.ndarray:
        c = a_abs + b_abs
        m, p, start = self._params['m'], self._params['p'], self._params['N']
        return self._weighted_rows(c, r ** m, 2) + self._weighted_rows(c, r ** p, 0, start)
