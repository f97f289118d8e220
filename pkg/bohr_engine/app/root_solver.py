"""
Root Solver - Certified isolation and refinement of the root of a gap function
"""

import logging
import math
from dataclasses import dataclass
from typing import Any, Dict, Optional, Type

import numpy as np

from config import Config

from .exceptions import InvalidParameterError, NoRootError, NumericError
from .problems import BaseProblem


@dataclass(frozen=True)
class Bracket:
    """Interval [lo, hi] with G(lo) < 0 <= G(hi)."""

    lo: float
    hi: float

    def __post_init__(self):
        if not 0.0 <= self.lo < self.hi < 1.0:
            raise InvalidParameterError(f"invalid bracket [{self.lo!r}, {self.hi!r}]")

    @property
    def width(self) -> float:
        return self.hi - self.lo

    def to_dict(self) -> Dict[str, float]:
        return {'lo': self.lo, 'hi': self.hi}


@dataclass(frozen=True)
class RootResult:
    radius: float
    final_bracket: Bracket
    residual: float
    iterations: int
    monotone_certified: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            'radius': self.radius,
            'residual': self.residual,
            'bracket': self.final_bracket.to_dict(),
            'iterations': self.iterations,
            'monotone_certified': self.monotone_certified
        }


class RootSolver:
    """
    Bisection on a sign-changing bracket followed by a guarded Newton polish.

    Gap functions are only known to be continuous and strictly increasing,
    so bisection carries the convergence guarantee; a Newton step is kept
    only when it lands inside the final bracket and lowers |G|.
    """

    def __init__(self, cfg: Type[Config] = Config):
        self.cfg = cfg
        self.logger = logging.getLogger('root_solver')

    def _gap(self, problem: BaseProblem, r: float) -> float:
        try:
            value = problem.evaluate_gap(r)
        except (OverflowError, ZeroDivisionError) as e:
            raise NumericError(f"{problem.label()}: G({r!r}) failed: {e}", r=r)
        if not math.isfinite(value):
            raise NumericError(f"{problem.label()}: G({r!r}) = {value!r} is not finite", r=r)
        return value

    def find_upper_bracket(self, problem: BaseProblem) -> Bracket:
        """
        Scan hi = 1 - 2^-j, j = 1..40 (capped at the largest admissible r)
        for the first sign change of G.

        Args:
            problem: Problem whose gap function is bracketed

        Returns:
            Bracket with lo = 0
        """
        g0 = self._gap(problem, 0.0)
        if g0 >= 0.0:
            raise NoRootError(f"{problem.label()}: G(0) = {g0!r} is not negative")

        for j in range(1, self.cfg.BRACKET_MAX_HALVINGS + 1):
            hi = min(1.0 - 2.0 ** -j, self.cfg.MAX_RADIUS)
            if self._gap(problem, hi) > 0.0:
                self.logger.debug(f"{problem.label()}: bracket [0, {hi!r}] after {j} halvings")
                return Bracket(0.0, hi)
            if hi >= self.cfg.MAX_RADIUS:
                break

        raise NoRootError(f"{problem.label()}: no sign change of G on (0, 1)")

    def solve(self, problem: BaseProblem, tol: float = Config.DEFAULT_TOL,
              max_iter: Optional[int] = None) -> RootResult:
        """
        Find the root of the problem's gap function.

        Args:
            problem: Radius problem
            tol: Final bracket width, in [1e-15, 1e-3]
            max_iter: Cap on bisection steps (default from configuration)

        Returns:
            RootResult with the residual recomputed at the returned radius
        """
        if not (isinstance(tol, (int, float)) and self.cfg.MIN_TOL <= tol <= self.cfg.MAX_TOL):
            raise InvalidParameterError(
                f"tol must lie in [{self.cfg.MIN_TOL:g}, {self.cfg.MAX_TOL:g}], got {tol!r}"
            )
        max_iter = self.cfg.MAX_ITER if max_iter is None else max_iter
        if isinstance(max_iter, bool) or not isinstance(max_iter, int) or max_iter < 1:
            raise InvalidParameterError(f"max_iter must be a positive integer, got {max_iter!r}")

        bracket = self.find_upper_bracket(problem)
        lo, hi = bracket.lo, bracket.hi
        iterations = 0

        while hi - lo > tol:
            if iterations >= max_iter:
                raise NumericError(
                    f"{problem.label()}: bracket width {hi - lo:.3e} > tol after {max_iter} iterations",
                    r=hi
                )
            mid = 0.5 * (lo + hi)
            if mid <= lo or mid >= hi:
                break
            if self._gap(problem, mid) < 0.0:
                lo = mid
            else:
                hi = mid
            iterations += 1

        radius, residual, polish_steps = self._polish(problem, lo, hi)
        iterations += polish_steps

        if residual > self.cfg.RESIDUAL_TOL:
            self.logger.warning(
                f"{problem.label()}: residual {residual:.3e} exceeds {self.cfg.RESIDUAL_TOL:.1e}"
            )

        result = RootResult(
            radius=radius,
            final_bracket=Bracket(lo, hi),
            residual=residual,
            iterations=iterations,
            monotone_certified=self.certify_monotone(problem)
        )
        self.logger.info(f"Solved {problem.label()}: r = {radius:.12g} (residual {residual:.3e})")
        return result

    def _polish(self, problem: BaseProblem, lo: float, hi: float):
        x = hi
        g = self._gap(problem, x)
        best = abs(g)
        steps = 0
        h = self.cfg.FD_STEP

        for _ in range(self.cfg.NEWTON_STEPS):
            if g == 0.0:
                break
            a = max(x - h, 0.0)
            b = min(x + h, self.cfg.MAX_RADIUS)
            slope = (self._gap(problem, b) - self._gap(problem, a)) / (b - a)
            if not math.isfinite(slope) or slope <= 0.0:
                break
            candidate = x - g / slope
            if not lo < candidate <= hi:
                break
            g_candidate = self._gap(problem, candidate)
            if abs(g_candidate) >= best:
                break
            x, g, best = candidate, g_candidate, abs(g_candidate)
            steps += 1
            self.logger.debug(f"{problem.label()}: Newton step {steps} -> r = {x!r}, |G| = {best:.3e}")

        return x, best, steps

    def certify_monotone(self, problem: BaseProblem, samples: Optional[int] = None) -> bool:
        """
        Check strict increase across equispaced points of [0, 1 - 1e-6].

        Compares lhs_class_bound, which differs from G by the constant target,
        so increments far below the target's last bit stay visible. A bound
        that overflows past some r diverges to +inf there; the scan stops and
        the points before it decide.
        """
        samples = self.cfg.MONOTONE_SAMPLES if samples is None else samples
        if isinstance(samples, bool) or not isinstance(samples, int) or samples < 2:
            raise InvalidParameterError(f"samples must be an integer >= 2, got {samples!r}")

        previous = None
        for r in np.linspace(0.0, self.cfg.MAX_RADIUS, samples):
            try:
                value = problem.lhs_class_bound(float(r))
            except OverflowError:
                value = math.inf
            if value == math.inf and previous is not None:
                self.logger.debug(f"{problem.label()}: class bound overflows from r = {float(r)!r}")
                return True
            if not math.isfinite(value) or (previous is not None and value <= previous):
                self.logger.warning(f"{problem.label()}: not strictly increasing at r = {float(r)!r}")
                return False
            previous = value
        return True
