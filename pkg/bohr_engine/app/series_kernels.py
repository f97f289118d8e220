"""
Series Kernels - Closed forms, partial sums and tail bounds for the weighted
geometric series sum_{n >= N} n^alpha x^n
"""

import math
from dataclasses import dataclass
from typing import Tuple

from config import Config

from .exceptions import BoundUnavailableError, DomainError, InvalidParameterError


SUPPORTED_WEIGHTS: Tuple[int, ...] = (0, 1, 2, 3, 5)

# (alpha, N) pairs with a rational closed form. alpha in {0, 1} accepts any N.
SUBTRACTIVE_WEIGHTS: Tuple[int, ...] = (2, 3, 5)
SUBTRACTIVE_STARTS: Tuple[int, ...] = (1, 2)


def _require_int(value, name: str, minimum: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidParameterError(f"{name} must be an integer, got {value!r}")
    if value < minimum:
        raise InvalidParameterError(f"{name} must be >= {minimum}, got {value}")
    return value


def require_radius(r: float, name: str = "r") -> float:
    """
    Check that a modulus lies in the evaluation domain [0, 1 - 1e-6].

    Args:
        r: Value to check
        name: Name used in the error message

    Returns:
        r as float
    """
    try:
        value = float(r)
    except (TypeError, ValueError):
        raise DomainError(f"{name} must be a real number, got {r!r}")
    if not math.isfinite(value) or value < 0.0 or value > Config.MAX_RADIUS:
        raise DomainError(f"{name}={value!r} outside [0, {Config.MAX_RADIUS!r}]")
    return value


@dataclass(frozen=True)
class WeightedGeometricSeries:
    """The series sum_{n >= start_index} n^weight_exponent * argument^n."""

    weight_exponent: int
    start_index: int
    argument: float

    def __post_init__(self):
        if self.weight_exponent not in SUPPORTED_WEIGHTS or isinstance(self.weight_exponent, bool):
            raise InvalidParameterError(
                f"weight_exponent must be one of {SUPPORTED_WEIGHTS}, got {self.weight_exponent!r}"
            )
        _require_int(self.start_index, "start_index", 1)
        object.__setattr__(self, "argument", require_radius(self.argument, "argument"))

    def term(self, n: int) -> float:
        return float(n) ** self.weight_exponent * self.argument ** n


def is_supported(weight_exponent: int, start_index: int) -> bool:
    """Whether (alpha, N) has a closed form."""
    if weight_exponent in (0, 1):
        return start_index >= 1
    return weight_exponent in SUBTRACTIVE_WEIGHTS and start_index in SUBTRACTIVE_STARTS


def _from_one(alpha: int, x: float) -> float:
    # sum_{n >= 1} n^alpha x^n for alpha in {2, 3, 5}
    if alpha == 2:
        return x * (1.0 + x) / (1.0 - x) ** 3
    if alpha == 3:
        return x * (1.0 + 4.0 * x + x * x) / (1.0 - x) ** 4
    x2 = x * x
    return x * (1.0 + 26.0 * x + 66.0 * x2 + 26.0 * x2 * x + x2 * x2) / (1.0 - x) ** 6


def closed_sum(series: WeightedGeometricSeries) -> float:
    """
    Evaluate sum_{n >= N} n^alpha x^n through its rational closed form.

    Args:
        series: Series description

    Returns:
        The exact value of the infinite sum (up to rounding)
    """
    alpha, start, x = series.weight_exponent, series.start_index, series.argument
    if not is_supported(alpha, start):
        raise InvalidParameterError(f"no closed form for (alpha={alpha}, N={start})")

    if alpha == 0:
        return x ** start / (1.0 - x)
    if alpha == 1:
        return x ** start * (start + x - start * x) / (1.0 - x) ** 2

    value = _from_one(alpha, x)
    if start == 2:
        value -= x
    return value


def partial_sum(series: WeightedGeometricSeries, order: int) -> float:
    """
    Sum the terms n = N..K directly. The accumulation is correctly rounded
    (math.fsum), so the result is nondecreasing in K.

    Args:
        series: Series description
        order: Last index K (inclusive)

    Returns:
        sum_{n=N}^{K} n^alpha x^n
    """
    _require_int(order, "K", 1)
    if order < series.start_index:
        raise InvalidParameterError(f"K={order} is below start index N={series.start_index}")
    return math.fsum(series.term(n) for n in range(series.start_index, order + 1))


def tail_bound(series: WeightedGeometricSeries, order: int) -> float:
    """
    Upper bound on sum_{n > K} n^alpha x^n.

    Beyond K the term ratio x((n+1)/n)^alpha is at most x(1 + 1/(K+1))^alpha,
    so the tail is dominated by a geometric series starting at the term K+1.

    Args:
        series: Series description
        order: Truncation order K

    Returns:
        (K+1)^alpha x^(K+1) / (1 - x(1 + 1/(K+1))^alpha)
    """
    _require_int(order, "K", 1)
    if order < series.start_index:
        raise InvalidParameterError(f"K={order} is below start index N={series.start_index}")

    alpha, x = series.weight_exponent, series.argument
    ratio = x * (1.0 + 1.0 / (order + 1)) ** alpha
    if ratio >= 1.0:
        raise BoundUnavailableError(
            f"tail bound unavailable at K={order}: term ratio {ratio:.6g} >= 1"
        )
    return float(order + 1) ** alpha * x ** (order + 1) / (1.0 - ratio)


def adaptive_order(series: WeightedGeometricSeries,
                   target: float = Config.IDENTITY_TAIL_TARGET,
                   max_order: int = Config.IDENTITY_MAX_ORDER) -> int:
    """
    Smallest K in the doubling sequence 16, 32, ... (not below N) whose tail
    bound is available and at most `target`.
    """
    order = max(16, series.start_index)
    while order <= max_order:
        try:
            if tail_bound(series, order) <= target:
                return order
        except BoundUnavailableError:
            pass
        order *= 2
    raise BoundUnavailableError(
        f"no truncation order up to {max_order} reaches tail bound {target:g} "
        f"for alpha={series.weight_exponent}, x={series.argument!r}"
    )


def weighted_sum(weight_exponent: int, start_index: int, x: float) -> float:
    """Shorthand for closed_sum(WeightedGeometricSeries(alpha, N, x))."""
    return closed_sum(WeightedGeometricSeries(weight_exponent, start_index, x))
