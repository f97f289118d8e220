"""
Extremal Maps - Koebe and half-plane maps, harmonic differential operators,
majorant series and the area functional
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence, Tuple

import numpy as np

from config import Config

from .exceptions import InvalidParameterError
from .series_kernels import require_radius, weighted_sum


logger = logging.getLogger('extremal_maps')


@dataclass(frozen=True)
class OperatorKind:
    """
    A harmonic differential operator acting on f = h + conj(g).

    `order` is the number of times D (or its sense-reversing twin) is applied;
    on coefficient moduli each application multiplies the n-th term by n.
    Flambda mixes f and Df with weight lam.
    """

    name: str
    order: int = 0
    lam: Optional[float] = None

    def __post_init__(self):
        if self.lam is not None and not 0.0 <= self.lam <= 1.0:
            raise InvalidParameterError(f"lambda must lie in [0, 1], got {self.lam!r}")

    @classmethod
    def flambda(cls, lam: float) -> 'OperatorKind':
        return cls('Flambda', 0, float(lam))

    def weight(self, n: int) -> float:
        """Multiplier w(n) of the n-th coefficient modulus."""
        if self.lam is not None:
            return (1.0 - self.lam) + self.lam * n
        return float(n) ** self.order


IDENTITY = OperatorKind('Identity', 0)
D = OperatorKind('D', 1)
DSCRIPT = OperatorKind('Dscript', 1)
D2 = OperatorKind('D2', 2)
DSCRIPT2 = OperatorKind('Dscript2', 2)


def first_order(flavor: str) -> OperatorKind:
    return DSCRIPT if flavor == 'Dscript' else D


def second_order(flavor: str) -> OperatorKind:
    return DSCRIPT2 if flavor == 'Dscript' else D2


@dataclass(frozen=True)
class HarmonicCoefficientMap:
    """
    Coefficients of f = z + sum a_n z^n + conj(sum b_n z^n).

    Either explicit finite lists (index 0 is n = 1, zero beyond the list) or
    generator rules n -> a_n, n -> b_n.
    """

    description: str
    a: Tuple[float, ...] = (1.0,)
    b: Tuple[float, ...] = (0.0,)
    a_rule: Optional[Callable[[int], float]] = field(default=None, compare=False)
    b_rule: Optional[Callable[[int], float]] = field(default=None, compare=False)

    def __post_init__(self):
        if self.a_rule is None and (not self.a or self.a[0] != 1.0):
            raise InvalidParameterError("a_1 must equal 1")
        if self.b_rule is None and self.b and self.b[0] != 0.0:
            raise InvalidParameterError("b_1 must equal 0")
        if self.a_rule is not None and self.a_rule(1) != 1.0:
            raise InvalidParameterError("a_1 must equal 1")
        if self.b_rule is not None and self.b_rule(1) != 0.0:
            raise InvalidParameterError("b_1 must equal 0")

    @classmethod
    def koebe(cls) -> 'HarmonicCoefficientMap':
        return cls('koebe', a_rule=float, b_rule=lambda n: 0.0)

    @classmethod
    def half_plane(cls) -> 'HarmonicCoefficientMap':
        return cls('half-plane', a_rule=lambda n: 1.0, b_rule=lambda n: 0.0)

    @classmethod
    def identity(cls) -> 'HarmonicCoefficientMap':
        return cls('identity')

    @classmethod
    def from_coefficients(cls, a: Sequence[float], b: Sequence[float],
                          description: str = 'finite') -> 'HarmonicCoefficientMap':
        return cls(description, tuple(float(x) for x in a), tuple(float(x) for x in b))

    @staticmethod
    def _truncate(values: Tuple[float, ...], rule, order: int) -> np.ndarray:
        if rule is not None:
            return np.array([rule(n) for n in range(1, order + 1)], dtype=float)
        out = np.zeros(order, dtype=float)
        count = min(order, len(values))
        out[:count] = values[:count]
        return out

    def moduli(self, order: int) -> Tuple[np.ndarray, np.ndarray]:
        """|a_n| and |b_n| for n = 1..order."""
        a = self._truncate(self.a, self.a_rule, order)
        b = self._truncate(self.b, self.b_rule, order)
        return np.abs(a), np.abs(b)


@dataclass(frozen=True)
class ExtremalMap:
    """
    Extremal map of a mapping class with coefficients c_n = n^shift
    (Koebe: shift 1, half-plane: shift 0). All quantities in closed form.
    """

    name: str
    shift: int

    def coefficient_bound(self, n: int) -> float:
        return float(n) ** self.shift

    def value(self, x: float) -> float:
        return weighted_sum(self.shift, 1, x)

    def operator_value(self, op: OperatorKind, x: float) -> float:
        """Majorant of op(f) at |z| = x."""
        if op.lam is not None:
            return ((1.0 - op.lam) * weighted_sum(self.shift, 1, x)
                    + op.lam * weighted_sum(self.shift + 1, 1, x))
        return weighted_sum(self.shift + op.order, 1, x)

    def majorant_tail(self, start: int, x: float) -> float:
        """sum_{n >= start} c_n x^n"""
        return weighted_sum(self.shift, start, x)

    def area_ratio(self, r: float) -> float:
        """sum n^3 c_n^2 r^(2n)"""
        r = require_radius(r)
        return weighted_sum(3 + 2 * self.shift, 1, r * r)


KOEBE = ExtremalMap('koebe', 1)
HALF_PLANE = ExtremalMap('half-plane', 0)


def koebe_value(r: float) -> float:
    """k(r) = r / (1 - r)^2"""
    r = require_radius(r)
    return r / (1.0 - r) ** 2


def halfplane_value(r: float) -> float:
    """l(r) = r / (1 - r)"""
    r = require_radius(r)
    return r / (1.0 - r)


def _require_order(order: int, minimum: int) -> int:
    if isinstance(order, bool) or not isinstance(order, int) or order < minimum:
        raise InvalidParameterError(f"K must be an integer >= {minimum}, got {order!r}")
    return order


def operator_majorant(coefficient_map: HarmonicCoefficientMap, op: OperatorKind,
                      r: float, order: int) -> float:
    """
    Truncated majorant r + sum_{n=2}^{K} w(n) (|a_n| + |b_n|) r^n of op(f).

    Args:
        coefficient_map: Map whose coefficients are bounded
        op: Operator applied to the map
        r: Modulus |z|
        order: Truncation order K >= 2

    Returns:
        The truncated majorant series
    """
    r = require_radius(r)
    _require_order(order, 2)
    a_abs, b_abs = coefficient_map.moduli(order)
    terms = [r]
    for n in range(2, order + 1):
        terms.append(op.weight(n) * (a_abs[n - 1] + b_abs[n - 1]) * r ** n)
    return math.fsum(terms)


def area_ratio_series(coefficient_map: HarmonicCoefficientMap, r: float, order: int) -> float:
    """sum_{n=1}^{K} n^3 (|a_n|^2 - |b_n|^2) r^(2n)"""
    r = require_radius(r)
    _require_order(order, 1)
    a_abs, b_abs = coefficient_map.moduli(order)
    r2 = r * r
    return math.fsum(
        float(n) ** 3 * (a_abs[n - 1] ** 2 - b_abs[n - 1] ** 2) * r2 ** n
        for n in range(1, order + 1)
    )


def classical_area_series(coefficient_map: HarmonicCoefficientMap, r: float, order: int) -> float:
    """Parseval area of f itself: sum_{n=1}^{K} n (|a_n|^2 - |b_n|^2) r^(2n)"""
    r = require_radius(r)
    _require_order(order, 1)
    a_abs, b_abs = coefficient_map.moduli(order)
    r2 = r * r
    return math.fsum(
        float(n) * (a_abs[n - 1] ** 2 - b_abs[n - 1] ** 2) * r2 ** n
        for n in range(1, order + 1)
    )


def _derivative_modulus_squared(coefficients: np.ndarray, z: np.ndarray) -> np.ndarray:
    # Horner evaluation of sum_n coefficients[n-1] z^(n-1)
    acc = np.zeros_like(z)
    for c in coefficients[::-1]:
        acc = acc * z + c
    return acc.real ** 2 + acc.imag ** 2


def polar_midpoint_sum(coefficient_map: HarmonicCoefficientMap, r: float, order: int,
                       grid: int, band_size: int = Config.AREA_BAND_SIZE) -> float:
    """
    Plain tensor-product midpoint rule for (1/pi) * integral over |z| < r of
    |H'|^2 - |G'|^2, with H = sum n a_n z^n and G = sum n b_n z^n.

    `grid` radial nodes times 4 * grid angular nodes. Radial bands are summed
    separately and reduced with math.fsum in band order.
    """
    r = require_radius(r)
    _require_order(order, 1)
    if isinstance(grid, bool) or not isinstance(grid, int) or grid < 1:
        raise InvalidParameterError(f"grid must be a positive integer, got {grid!r}")
    if r == 0.0:
        return 0.0

    a_abs, b_abs = coefficient_map.moduli(order)
    n = np.arange(1, order + 1, dtype=float)
    h_coefficients = n * n * a_abs
    g_coefficients = n * n * b_abs
    has_g = bool(np.any(g_coefficients))

    d_rho = r / grid
    angles = 4 * grid
    d_theta = 2.0 * math.pi / angles
    phases = np.exp(1j * (np.arange(angles) + 0.5) * d_theta)

    band_sums = []
    for start in range(0, grid, band_size):
        rho = (np.arange(start, min(start + band_size, grid)) + 0.5) * d_rho
        z = rho[:, None] * phases[None, :]
        jacobian = _derivative_modulus_squared(h_coefficients, z)
        if has_g:
            jacobian = jacobian - _derivative_modulus_squared(g_coefficients, z)
        band_sums.append(float(np.sum(jacobian.sum(axis=1) * rho)))

    return math.fsum(band_sums) * d_rho * d_theta / math.pi


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    grid: int
    refinement_delta: float
    converged: bool

    def to_dict(self):
        return {
            'value': self.value,
            'grid': self.grid,
            'refinement_delta': self.refinement_delta,
            'converged': self.converged
        }


def _richardson(fine: float, coarse: float, ratio: float) -> float:
    """Eliminate the leading error term, which shrinks by `ratio` from coarse to fine."""
    return (ratio * fine - coarse) / (ratio - 1.0)


def area_ratio_quadrature(coefficient_map: HarmonicCoefficientMap, r: float, order: int,
                          grid: int = Config.AREA_GRID,
                          tolerance: float = Config.AREA_REFINEMENT_TOLERANCE) -> QuadratureResult:
    """
    Quadrature oracle for the area functional of the dilated pair (z h', z g').

    The midpoint error expands in even powers of the radial step, so the
    sums on grids g, g2 = g // 2 and g4 = g // 4 give two Richardson
    extrapolants R1 = (q1 M(g) - M(g2)) / (q1 - 1), q1 = (g / g2)^2, and
    R2 = (q2 M(g2) - M(g4)) / (q2 - 1), q2 = (g2 / g4)^2. Their difference
    is the refinement delta and (Q R1 - R2) / (Q - 1), Q = (g / g4)^2, is
    returned. For g divisible by 4 the weights are 4, 4 and 16.

    Args:
        coefficient_map: Map to integrate
        r: Radius of the subdisk
        order: Truncation order K
        grid: Radial node count, at least 64
        tolerance: Largest refinement delta accepted as converged

    Returns:
        QuadratureResult; converged is False (and a warning is logged) when
        the refinement delta exceeds `tolerance`
    """
    if isinstance(grid, bool) or not isinstance(grid, int) or grid < 64:
        raise InvalidParameterError(f"grid must be an integer >= 64, got {grid!r}")
    r = require_radius(r)

    middle_grid, coarse_grid = grid // 2, grid // 4
    fine = polar_midpoint_sum(coefficient_map, r, order, grid)
    middle = polar_midpoint_sum(coefficient_map, r, order, middle_grid)
    coarse = polar_midpoint_sum(coefficient_map, r, order, coarse_grid)

    extrapolated = _richardson(fine, middle, (grid / middle_grid) ** 2)
    previous = _richardson(middle, coarse, (middle_grid / coarse_grid) ** 2)
    delta = abs(extrapolated - previous)
    value = _richardson(extrapolated, previous, (grid / coarse_grid) ** 2)
    converged = delta <= tolerance
    if not converged:
        logger.warning(
            f"Area quadrature for {coefficient_map.description} at r={r} not converged: "
            f"refinement delta {delta:.3e} > {tolerance:.1e}"
        )
    return QuadratureResult(value=value, grid=grid, refinement_delta=delta, converged=converged)
