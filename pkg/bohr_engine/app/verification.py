"""
Verification Suite - Table reproduction, sharpness scans, series identities,
class sampling, monotonicity certificates and the area cross-check
"""

import logging
import math
import sys
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Type

import numpy as np

from config import PROBLEM_CONFIGURATIONS, REFERENCE_TABLES, SHARPNESS_DEFAULTS, TABLE_ERRATA, Config

from .exceptions import DomainError, InvalidParameterError
from .extremal_maps import (
    KOEBE,
    HarmonicCoefficientMap,
    area_ratio_quadrature,
    area_ratio_series,
    classical_area_series,
    koebe_value
)
from .problems import BaseProblem, NonnegPolynomial
from .root_solver import RootResult, RootSolver
from .router import ProblemRouter
from .series_kernels import (
    WeightedGeometricSeries,
    adaptive_order,
    closed_sum,
    partial_sum,
    require_radius,
    tail_bound,
    weighted_sum
)


# Every (alpha, N) combination with a closed form that the suite exercises.
IDENTITY_PAIRS: Tuple[Tuple[int, int], ...] = (
    (0, 1), (0, 2), (0, 3),
    (1, 1), (1, 2), (1, 3),
    (2, 1), (2, 2),
    (3, 1), (3, 2),
    (5, 1), (5, 2)
)

SUITES = ('identities', 'sharpness', 'sampling', 'area', 'monotone', 'reductions', 'theorem51')

# P(t) = 16/9 t + 18.6095 t^2
THEOREM51_POLYNOMIAL = (16.0 / 9.0, 18.6095)


@dataclass
class CheckEntry:
    case: str
    metric: float
    passed: bool
    advisory: bool = False
    details: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'case': self.case,
            'metric': self.metric,
            'passed': self.passed,
            'advisory': self.advisory,
            'details': dict(self.details)
        }


@dataclass
class SuiteReport:
    name: str
    entries: List[CheckEntry] = field(default_factory=list)

    @property
    def failures(self) -> int:
        """Failed entries that are not advisory."""
        return sum(1 for entry in self.entries if not entry.passed and not entry.advisory)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'passed': self.passed,
            'failures': self.failures,
            'entries': [entry.to_dict() for entry in self.entries]
        }


@dataclass
class TableRow:
    """
    One reproduced radius. `expected_radius` is the printed value and
    `reference_radius` the value checked against; they differ only for
    rows listed in TABLE_ERRATA. abs_delta = |computed - reference|.
    """

    table_id: str
    problem: BaseProblem
    expected_radius: float
    computed_radius: float
    abs_delta: float
    residual: float
    passed: bool
    reference_radius: Optional[float] = None

    def __post_init__(self):
        if self.reference_radius is None:
            self.reference_radius = self.expected_radius

    @property
    def erratum(self) -> bool:
        return self.reference_radius != self.expected_radius

    def to_entry(self) -> CheckEntry:
        return CheckEntry(
            case=f"table {self.table_id} {self.problem.label()}",
            metric=self.abs_delta,
            passed=self.passed,
            details={
                'expected': self.expected_radius,
                'reference': self.reference_radius,
                'computed': self.computed_radius,
                'residual': self.residual
            }
        )


@dataclass
class SharpnessReport:
    problem: BaseProblem
    radius: float
    epsilon: float
    value_below: float
    value_above: float
    holds_below: bool
    fails_above: bool
    advisory: bool

    @property
    def passed(self) -> bool:
        return self.holds_below and self.fails_above

    def to_entry(self) -> CheckEntry:
        return CheckEntry(
            case=f"{self.problem.label()} eps={self.epsilon:g}",
            metric=self.value_above - self.value_below,
            passed=self.passed,
            advisory=self.advisory,
            details={
                'radius': self.radius,
                'value_below': self.value_below,
                'value_above': self.value_above,
                'holds_below': self.holds_below,
                'fails_above': self.fails_above
            }
        )


@dataclass
class SamplingReport:
    problem: BaseProblem
    radius: float
    trials: int
    seed: int
    violations: int
    max_lhs: float
    advisory: bool

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def to_entry(self) -> CheckEntry:
        return CheckEntry(
            case=self.problem.label(),
            metric=float(self.violations),
            passed=self.passed,
            advisory=self.advisory,
            details={
                'radius': self.radius,
                'trials': self.trials,
                'seed': self.seed,
                'max_lhs': self.max_lhs,
                'target': self.problem.target()
            }
        )


class Verifier:
    """
    Runs the verification suites. Failed checks become report entries;
    nothing here raises for a failed check.
    """

    def __init__(self, cfg: Type[Config] = Config, solver: Optional[RootSolver] = None,
                 router: Optional[ProblemRouter] = None, tol: Optional[float] = None,
                 max_iter: Optional[int] = None):
        self.cfg = cfg
        self.solver = solver or RootSolver(cfg)
        self.router = router or ProblemRouter()
        self.tol = cfg.DEFAULT_TOL if tol is None else tol
        self.max_iter = max_iter
        self.logger = logging.getLogger('verification')
        self._solved: Dict[str, RootResult] = {}

    def solve(self, problem: BaseProblem) -> RootResult:
        """Solve once per problem label; solving is deterministic."""
        key = problem.label()
        if key not in self._solved:
            self._solved[key] = self.solver.solve(problem, tol=self.tol, max_iter=self.max_iter)
        return self._solved[key]

    # Problem sets

    def table_problems(self, table_id: str) -> List[Tuple[BaseProblem, float]]:
        if table_id not in REFERENCE_TABLES:
            raise InvalidParameterError(
                f"unknown table {table_id!r}; expected one of {', '.join(REFERENCE_TABLES)}"
            )
        table = REFERENCE_TABLES[table_id]
        return [(self.router.build(table['problem'], params), expected) for params, expected in table['rows']]

    def default_problems(self) -> List[BaseProblem]:
        return [self.router.build(problem_id, params) for problem_id, params in SHARPNESS_DEFAULTS.items()]

    def scan_problems(self) -> List[BaseProblem]:
        """The 16 table problems followed by the default parameter sets."""
        problems = [problem for table_id in REFERENCE_TABLES for problem, _ in self.table_problems(table_id)]
        return problems + self.default_problems()

    # Tables

    def reproduce_table(self, table_id: str) -> List[TableRow]:
        """
        Solve every row of a reference table.

        Args:
            table_id: '3.1', '3.2', '3.3' or '3.4'

        Returns:
            One TableRow per published radius
        """
        rows = []
        for index, (problem, expected) in enumerate(self.table_problems(table_id)):
            reference = TABLE_ERRATA.get((table_id, index), expected)
            if reference != expected:
                self.logger.info(
                    f"Table {table_id} {problem.label()}: printed {expected:.6f}, checked against {reference:.6f}"
                )
            result = self.solve(problem)
            delta = abs(result.radius - reference)
            rows.append(TableRow(
                table_id=table_id,
                problem=problem,
                expected_radius=expected,
                computed_radius=result.radius,
                abs_delta=delta,
                residual=result.residual,
                passed=delta <= self.cfg.TABLE_TOLERANCE and result.residual <= self.cfg.RESIDUAL_TOL,
                reference_radius=reference
            ))
        failed = sum(1 for row in rows if not row.passed)
        self.logger.info(f"Table {table_id}: {len(rows) - failed}/{len(rows)} rows reproduced")
        return rows

    # Sharpness

    def sharpness_scan(self, problem: BaseProblem, epsilon: float,
                       radius: Optional[float] = None) -> SharpnessReport:
        """
        Evaluate the extremal left-hand side just below and just above the radius.

        Args:
            problem: Radius problem
            epsilon: Offset in (0, 0.01]
            radius: Solved radius (solved here when omitted)

        Returns:
            SharpnessReport; advisory for problems whose extremal map does not
            attain the class bound
        """
        if not 0.0 < epsilon <= 0.01:
            raise InvalidParameterError(f"epsilon must lie in (0, 0.01], got {epsilon!r}")
        if radius is None:
            radius = self.solve(problem).radius
        if radius + epsilon > self.cfg.MAX_RADIUS:
            raise InvalidParameterError(f"radius + epsilon = {radius + epsilon!r} reaches 1")

        target = problem.target()
        below = problem.lhs_extremal(max(radius - epsilon, 0.0))
        above = problem.lhs_extremal(radius + epsilon)
        report = SharpnessReport(
            problem=problem,
            radius=radius,
            epsilon=epsilon,
            value_below=below,
            value_above=above,
            holds_below=below <= target,
            fails_above=above > target,
            advisory=problem.advisory
        )
        if report.advisory:
            class_value, extremal_value = problem.lhs_pair(radius)
            self.logger.warning(
                f"{problem.label()}: sharpness is advisory; at r = {radius:.12g} the class bound "
                f"is {class_value:.12g} and the extremal value is {extremal_value:.12g}"
            )
        return report

    def sharpness_suite(self, epsilons: Optional[Sequence[float]] = None) -> SuiteReport:
        epsilons = self.cfg.SHARPNESS_EPSILONS if epsilons is None else epsilons
        report = SuiteReport('sharpness')
        for problem in self.scan_problems():
            for epsilon in epsilons:
                report.entries.append(self.sharpness_scan(problem, epsilon).to_entry())
        return self._finish(report)

    # Series identities

    def identity_suite(self, grid: Optional[Iterable[float]] = None) -> SuiteReport:
        """
        Compare every closed form with an adaptively truncated partial sum.

        An entry passes when |closed - partial| is within the tail bound plus
        a rounding allowance of (K + 32) eps |closed|, and the tail bound
        reaches the configured target.
        """
        grid = self.cfg.IDENTITY_GRID if grid is None else tuple(grid)
        for x in grid:
            if not 0.0 <= x <= 0.9:
                raise InvalidParameterError(f"identity grid points must lie in [0, 0.9], got {x!r}")

        report = SuiteReport('identities')
        for alpha, start in IDENTITY_PAIRS:
            for x in grid:
                series = WeightedGeometricSeries(alpha, start, float(x))
                order = adaptive_order(series, self.cfg.IDENTITY_TAIL_TARGET, self.cfg.IDENTITY_MAX_ORDER)
                closed = closed_sum(series)
                partial = partial_sum(series, order)
                bound = tail_bound(series, order)
                allowance = bound + (order + 32) * sys.float_info.epsilon * abs(closed)
                delta = abs(closed - partial)
                report.entries.append(CheckEntry(
                    case=f"alpha={alpha} N={start} x={float(x):g}",
                    metric=delta,
                    passed=delta <= allowance and bound <= self.cfg.IDENTITY_TAIL_TARGET,
                    details={'K': order, 'closed': closed, 'partial': partial, 'tail_bound': bound}
                ))
        return self._finish(report)

    # Class sampling

    def sample_coefficients(self, problem: BaseProblem, trials: int,
                            rng: np.random.Generator) -> Tuple[np.ndarray, np.ndarray]:
        """
        Draw |a_n| + |b_n| uniform in [0, c_n] and split it with |b_n| <= |a_n|;
        a_1 = 1 and b_1 = 0. Row i depends only on the generator state.
        """
        order = self.cfg.SAMPLING_TERMS
        bounds = problem.profile.coefficient_bounds(order)
        totals = rng.uniform(0.0, 1.0, size=(trials, order)) * bounds
        shares = rng.uniform(0.5, 1.0, size=(trials, order))
        a_abs = totals * shares
        b_abs = totals - a_abs
        a_abs[:, 0] = 1.0
        b_abs[:, 0] = 0.0
        return a_abs, b_abs

    def sample_class_inequality(self, problem: BaseProblem, trials: int, seed: int,
                                stream: int = 0) -> SamplingReport:
        """
        Check the Bohr inequality at the solved radius on random admissible maps.

        Args:
            problem: Radius problem
            trials: Number of coefficient sequences, >= 1
            seed: Base seed
            stream: Index mixed into the seed so each problem draws its own stream

        Returns:
            SamplingReport counting left-hand sides above target + 1e-12
        """
        if isinstance(trials, bool) or not isinstance(trials, int) or trials < 1:
            raise InvalidParameterError(f"trials must be a positive integer, got {trials!r}")

        radius = self.solve(problem).radius
        rng = np.random.default_rng([seed, stream])
        a_abs, b_abs = self.sample_coefficients(problem, trials, rng)
        lhs = problem.sample_lhs(a_abs, b_abs, radius)
        violations = int(np.count_nonzero(lhs > problem.target() + self.cfg.SAMPLING_SLACK))

        if violations and problem.advisory:
            self.logger.warning(f"{problem.label()}: {violations} advisory sampling violations")
        return SamplingReport(
            problem=problem,
            radius=radius,
            trials=trials,
            seed=seed,
            violations=violations,
            max_lhs=float(lhs.max()),
            advisory=problem.advisory
        )

    def sampling_suite(self, seed: int, trials: Optional[int] = None) -> SuiteReport:
        trials = self.cfg.SAMPLING_TRIALS if trials is None else trials
        report = SuiteReport('sampling')
        for stream, problem in enumerate(self.scan_problems()):
            report.entries.append(self.sample_class_inequality(problem, trials, seed, stream).to_entry())
        return self._finish(report)

    # Area functional

    def area_crosscheck(self, r_values: Optional[Iterable[float]] = None) -> SuiteReport:
        """
        Compare the area series of the truncated Koebe map with the polar
        quadrature of its dilated Jacobian. The classical weight-n area is
        reported next to it.
        """
        r_values = self.cfg.AREA_RADII if r_values is None else tuple(r_values)
        for r in r_values:
            if not 0.0 <= r <= 0.6:
                raise InvalidParameterError(f"area cross-check radii must lie in [0, 0.6], got {r!r}")

        koebe = HarmonicCoefficientMap.koebe()
        order = self.cfg.AREA_TERMS
        report = SuiteReport('area')
        for r in r_values:
            series = area_ratio_series(koebe, r, order)
            quadrature = area_ratio_quadrature(koebe, r, order, self.cfg.AREA_GRID)
            delta = abs(series - quadrature.value)
            report.entries.append(CheckEntry(
                case=f"koebe K={order} r={float(r):g}",
                metric=delta,
                passed=delta <= self.cfg.AREA_TOLERANCE,
                details={
                    'series': series,
                    'quadrature': quadrature.value,
                    'closed_form': KOEBE.area_ratio(r),
                    'classical_area': classical_area_series(koebe, r, order),
                    'refinement_delta': quadrature.refinement_delta,
                    'converged': quadrature.converged
                }
            ))
        return self._finish(report)

    # Area polynomial example

    def theorem51_case(self, r_probe: Optional[float] = None) -> SuiteReport:
        """
        Solve the area problem with P(t) = 16/9 t + 18.6095 t^2 and m = 1.

        The radius must lie in (0, 1), below the polynomial-free root
        3 - 2 sqrt(2) of r / (1 - r)^2 = 1/4, with a monotone certificate;
        the inequality is then evaluated at r_probe (default: half the radius).
        """
        problem = self.router.build('T51', {'m': 1, 'poly': THEOREM51_POLYNOMIAL})
        result = self.solve(problem)
        radius = result.radius
        baseline = 3.0 - 2.0 * math.sqrt(2.0)
        probe_entry = self._probe_entry(problem, radius / 2.0 if r_probe is None else r_probe)

        linear = problem.with_params(poly=NonnegPolynomial((1.0,)))
        linear_radius = self.solve(linear).radius
        reduction = abs(linear.lhs_class_bound(linear_radius)
                        - koebe_value(linear_radius) - weighted_sum(5, 1, linear_radius ** 2))

        report = SuiteReport('theorem51', [
            CheckEntry('radius in (0, 1)', radius, 0.0 < radius < 1.0),
            CheckEntry('radius below polynomial-free root', baseline - radius, radius <= baseline,
                       details={'baseline': baseline}),
            CheckEntry('monotone certificate', float(result.monotone_certified), result.monotone_certified),
            probe_entry,
            CheckEntry('linear polynomial reduction', reduction, reduction <= 1e-12,
                       details={'radius': linear_radius})
        ])
        return self._finish(report)

    @staticmethod
    def _probe_entry(problem: BaseProblem, r_probe: Any) -> CheckEntry:
        """Slack target - lhs at r_probe; a probe outside the domain fails the entry."""
        try:
            probe = require_radius(r_probe, 'r_probe')
        except DomainError as e:
            return CheckEntry(f"inequality at r={r_probe!r}", 0.0, False,
                              details={'r_probe': str(r_probe), 'error': str(e)})
        slack = problem.target() - problem.lhs_class_bound(probe)
        return CheckEntry(f"inequality at r={probe:.12g}", slack, slack >= 0.0, details={'r_probe': probe})

    # Monotonicity and closed-form reductions

    def random_problem(self, index: int, rng: np.random.Generator) -> BaseProblem:
        """Random parameter set for problem number index % 9."""
        problem_id = list(self.router.problems)[index % len(self.router.problems)]
        orders = [int(k) for k in rng.integers(1, 6, size=4)]
        candidates = {
            'm': orders[0], 'p': orders[1], 'q': orders[2], 's': orders[3],
            'N': int(rng.integers(2, 6)),
            'lambda': int(rng.integers(0, 11)) / 10.0
        }
        degree = int(rng.integers(1, 4))
        coefficients = np.round(rng.uniform(0.0, 20.0, size=degree), 4)
        coefficients[0] = max(coefficients[0], 0.1)
        candidates['poly'] = NonnegPolynomial(tuple(float(a) for a in coefficients))
        candidates['flavor'] = 'Dscript' if rng.integers(0, 2) else 'D'

        params = {name: candidates[name] for name in PROBLEM_CONFIGURATIONS[problem_id]['params']}
        params['flavor'] = candidates['flavor']
        return self.router.build(problem_id, params)

    def monotone_suite(self, count: Optional[int] = None, seed: int = 0) -> SuiteReport:
        count = self.cfg.MONOTONE_SUITE_SIZE if count is None else count
        if isinstance(count, bool) or not isinstance(count, int) or count < 1:
            raise InvalidParameterError(f"count must be a positive integer, got {count!r}")

        rng = np.random.default_rng(seed)
        report = SuiteReport('monotone')
        for index in range(count):
            problem = self.random_problem(index, rng)
            certified = self.solver.certify_monotone(problem, self.cfg.MONOTONE_SAMPLES)
            report.entries.append(CheckEntry(
                case=problem.label(),
                metric=float(self.cfg.MONOTONE_SAMPLES),
                passed=certified
            ))
        return self._finish(report)

    def closed_form_reductions(self, orders: Sequence[int] = (1, 2, 3, 4)) -> SuiteReport:
        """With lambda = 0 the combination problems have roots 5^(-1/m) and 3^(-1/m)."""
        report = SuiteReport('reductions')
        for problem_id, base in (('T41', 5.0), ('T42', 3.0)):
            for m in orders:
                problem = self.router.build(problem_id, {'m': m, 'lambda': 0.0})
                expected = base ** (-1.0 / m)
                delta = abs(self.solve(problem).radius - expected)
                report.entries.append(CheckEntry(
                    case=problem.label(),
                    metric=delta,
                    passed=delta <= 1e-10,
                    details={'expected': expected}
                ))
        return self._finish(report)

    # Dispatch

    def run(self, suite: str, seed: int = 0) -> List[SuiteReport]:
        """Run one named suite, or every suite for 'all'."""
        names = SUITES if suite == 'all' else (suite,)
        reports = []
        for name in names:
            if name == 'identities':
                reports.append(self.identity_suite())
            elif name == 'sharpness':
                reports.append(self.sharpness_suite())
            elif name == 'sampling':
                reports.append(self.sampling_suite(seed))
            elif name == 'area':
                reports.append(self.area_crosscheck())
            elif name == 'monotone':
                reports.append(self.monotone_suite(seed=seed))
            elif name == 'reductions':
                reports.append(self.closed_form_reductions())
            elif name == 'theorem51':
                reports.append(self.theorem51_case())
            else:
                raise InvalidParameterError(f"unknown suite {name!r}; expected one of {', '.join(SUITES)}, all")
        return reports

    def _finish(self, report: SuiteReport) -> SuiteReport:
        total = len(report.entries)
        advisory = sum(1 for entry in report.entries if entry.advisory)
        self.logger.info(
            f"Suite {report.name}: {total - report.failures}/{total} passed ({advisory} advisory)"
        )
        return report
