"""
Radius problems over stable harmonic univalent mappings (|a_n| + |b_n| <= n,
distance floor 1/4, Koebe extremal)
"""

import numpy as np

from ..extremal_maps import ExtremalMap, OperatorKind, first_order, second_order
from ..series_kernels import weighted_sum as S
from .base_problem import BaseProblem


class UnivalentOperatorMajorantProblem(BaseProblem):
    """|Df(omega_m(z))| + M_f(|omega_p(z)|) <= 1/4."""

    problem_id = 'T31'

    def _class_lhs(self, r: float) -> float:
        m, p = self._params['m'], self._params['p']
        t, u = r ** m, r ** p
        return t + S(2, 2, t) + u + S(1, 2, u)

    def _extremal_lhs(self, extremal: ExtremalMap, r: float) -> float:
        m, p = self._params['m'], self._params['p']
        return (extremal.operator_value(first_order(self.operator_flavor), r ** m)
                + extremal.majorant_tail(1, r ** p))

    def sample_lhs(self, a_abs: np.ndarray, b_abs: np.ndarray, r: float) -> np.ndarray:
        c = a_abs + b_abs
        m, p = self._params['m'], self._params['p']
        return self._weighted_rows(c, r ** m, 1) + self._weighted_rows(c, r ** p)


class UnivalentPowerProblem(BaseProblem):
    """|Df(omega_m(z))|^s + |f(omega_q(z))|^p <= 1."""

    problem_id = 'T33'

    def _class_lhs(self, r: float) -> float:
        s, m, p, q = (self._params[k] for k in ('s', 'm', 'p', 'q'))
        return S(2, 1, r ** m) ** s + S(1, 1, r ** q) ** p

    def _extremal_lhs(self, extremal: ExtremalMap, r: float) -> float:
        s, m, p, q = (self._params[k] for k in ('s', 'm', 'p', 'q'))
        operator = first_order(self.operator_flavor)
        return extremal.operator_value(operator, r ** m) ** s + extremal.value(r ** q) ** p

    def sample_lhs(self, a_abs: np.ndarray, b_abs: np.ndarray, r: float) -> np.ndarray:
        c = a_abs + b_abs
        s, m, p, q = (self._params[k] for k in ('s', 'm', 'p', 'q'))
        return self._weighted_rows(c, r ** m, 1) ** s + self._weighted_rows(c, r ** q) ** p


class UnivalentCombinationProblem(BaseProblem):
    """
    |F_lambda(omega_m(z))| <= 1/4 with F_lambda = (1 - lambda) f + lambda Df.

    The growth term is bounded by |omega|/(1 - |omega|), smaller than the
    Koebe growth r/(1 - r)^2, so the extremal value exceeds the class bound
    for lambda < 1 and sharpness is only reported.
    """

    problem_id = 'T41'
    advisory = True

    def _class_lhs(self, r: float) -> float:
        m, lam = self._params['m'], self._params['lambda']
        t = r ** m
        return (1.0 - lam) * S(0, 1, t) + lam * S(2, 1, t)

    def _extremal_lhs(self, extremal: ExtremalMap, r: float) -> float:
        m, lam = self._params['m'], self._params['lambda']
        return extremal.operator_value(OperatorKind.flambda(lam), r ** m)

    def sample_lhs(self, a_abs: np.ndarray, b_abs: np.ndarray, r: float) -> np.ndarray:
        c = a_abs + b_abs
        m, lam = self._params['m'], self._params['lambda']
        t = r ** m
        return (1.0 - lam) * self._weighted_rows(c, t) + lam * self._weighted_rows(c, t, 1)


class UnivalentSecondOrderProblem(BaseProblem):
    """|D^2 f(omega_m(z))| + sum_{n >= N} (|a_n| + |b_n|) |omega_p(z)|^n <= 1/4."""

    problem_id = 'T43'

    def _class_lhs(self, r: float) -> float:
        m, p, start = self._params['m'], self._params['p'], self._params['N']
        return S(3, 1, r ** m) + S(1, start, r ** p)

    def _extremal_lhs(self, extremal: ExtremalMap, r: float) -> float:
        m, p, start = self._params['m'], self._params['p'], self._params['N']
        return (extremal.operator_value(second_order(self.operator_flavor), r ** m)
                + extremal.majorant_tail(start, r ** p))

    def sample_lhs(self, a_abs: np.ndarray, b_abs: np.ndarray, r: float) -> np.ndarray:
        c = a_abs + b_abs
        m, p, start = self._params['m'], self._params['p'], self._params['N']
        return self._weighted_rows(c, r ** m, 2) + self._weighted_rows(c, r ** p, 0, start)


class AreaFunctionalProblem(BaseProblem):
    """|f(omega_m(z))| + P(S_r / pi) <= 1/4, S_r the image area of |z| < r."""

    problem_id = 'T51'

    def _class_lhs(self, r: float) -> float:
        m, poly = self._params['m'], self._params['poly']
        return S(1, 1, r ** m) + poly(S(5, 1, r * r))

    def _extremal_lhs(self, extremal: ExtremalMap, r: float) -> float:
        m, poly = self._params['m'], self._params['poly']
        return extremal.value(r ** m) + poly(extremal.area_ratio(r))

    def sample_lhs(self, a_abs: np.ndarray, b_abs: np.ndarray, r: float) -> np.ndarray:
        c = a_abs + b_abs
        m, poly = self._params['m'], self._params['poly']
        area = self._weighted_rows(a_abs ** 2 - b_abs ** 2, r * r, 3)
        return self._weighted_rows(c, r ** m) + poly.evaluate_array(area)
