#!/usr/bin/env python3
"""
Command-line front end for the Bohr radius engine
"""

import logging
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager
from typing import Any, List, Optional

import click

# Add current directory to Python path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from config import PROBLEM_CONFIGURATIONS, REFERENCE_TABLES, Config, config  # noqa: E402

from app.exceptions import BohrEngineError, DomainError, InvalidParameterError  # noqa: E402
from app.reporting import (  # noqa: E402
    FORMATS,
    render_problems,
    render_solve,
    render_sweep,
    render_table,
    render_verify
)
from app.root_solver import RootSolver  # noqa: E402
from app.router import ProblemRouter  # noqa: E402
from app.verification import SUITES, Verifier  # noqa: E402


logger = logging.getLogger('bohr_engine')

EXIT_FAILURE = 1
EXIT_NUMERIC = 3
MAX_SWEEP_POINTS = 10000


def configure_logging(cfg) -> None:
    """Log to stderr so rendered reports on stdout stay byte-identical."""
    logging.basicConfig(
        level=getattr(logging, cfg.LOG_LEVEL),
        format=cfg.LOG_FORMAT,
        stream=sys.stderr
    )


def common_options(command):
    """--tol, --format, --seed and --max-iter, accepted on the group and on each command."""
    options = [
        click.option('--tol', type=float, default=None, help='Final bracket width (default 1e-12).'),
        click.option('--format', 'fmt', type=click.Choice(FORMATS), default=None, help='Output format.'),
        click.option('--seed', type=int, default=None, help='Sampling seed (default 0).'),
        click.option('--max-iter', type=click.IntRange(min=1), default=None,
                     help='Bisection iteration cap (default 200).')
    ]
    for option in reversed(options):
        command = option(command)
    return command


class Settings:
    """Options given on the group, overridden per command."""

    def __init__(self, cfg, tol, fmt, seed, max_iter):
        self.cfg = cfg
        self.tol = tol
        self.fmt = fmt
        self.seed = seed
        self.max_iter = max_iter

    def resolve(self, ctx: click.Context, tol, fmt, seed, max_iter, default_format: str):
        tol = tol if tol is not None else self.tol
        tol = self.cfg.DEFAULT_TOL if tol is None else tol
        if not self.cfg.MIN_TOL <= tol <= self.cfg.MAX_TOL:
            raise click.BadParameter(
                f"must lie in [{self.cfg.MIN_TOL:g}, {self.cfg.MAX_TOL:g}]", ctx=ctx, param_hint='--tol'
            )
        fmt = fmt or self.fmt or default_format
        seed = seed if seed is not None else self.seed
        seed = 0 if seed is None else seed
        if seed < 0:
            raise click.BadParameter('must be >= 0', ctx=ctx, param_hint='--seed')
        max_iter = max_iter if max_iter is not None else self.max_iter
        max_iter = self.cfg.MAX_ITER if max_iter is None else max_iter
        return tol, fmt, seed, max_iter


@contextmanager
def engine_errors(ctx: click.Context):
    """Parameter errors exit 2 with usage text, numeric errors exit 3."""
    try:
        yield
    except (InvalidParameterError, DomainError) as e:
        raise click.UsageError(str(e), ctx)
    except (BohrEngineError, OverflowError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        click.echo(f"Error: {e}", err=True)
        ctx.exit(EXIT_NUMERIC)


@click.group()
@common_options
@click.option('--config-name', type=click.Choice(sorted(config)), default='default',
              help='Configuration profile.')
@click.version_option(Config.VERSION)
@click.pass_context
def cli(ctx, tol, fmt, seed, max_iter, config_name):
    """Bohr radii of stable harmonic mappings."""
    cfg = config[config_name]
    configure_logging(cfg)
    ctx.obj = Settings(cfg, tol, fmt, seed, max_iter)


@cli.command()
@click.argument('problem')
@click.argument('params', nargs=-1)
@common_options
@click.pass_context
def solve(ctx, problem, params, tol, fmt, seed, max_iter):
    """Solve PROBLEM (T31..T34, T41..T44, T51) for key=value PARAMS."""
    settings: Settings = ctx.obj
    tol, fmt, seed, max_iter = settings.resolve(ctx, tol, fmt, seed, max_iter, 'plain')
    with engine_errors(ctx):
        radius_problem = ProblemRouter().route(problem, params)
        result = RootSolver(settings.cfg).solve(radius_problem, tol=tol, max_iter=max_iter)
    click.echo(render_solve(fmt, radius_problem, result))


@cli.command()
@click.argument('table_id', type=click.Choice(sorted(REFERENCE_TABLES) + ['all']))
@common_options
@click.pass_context
def table(ctx, table_id, tol, fmt, seed, max_iter):
    """Reproduce a published radius table (3.1 .. 3.4, or all)."""
    settings: Settings = ctx.obj
    tol, fmt, seed, max_iter = settings.resolve(ctx, tol, fmt, seed, max_iter, 'plain')
    verifier = Verifier(settings.cfg, tol=tol, max_iter=max_iter)
    table_ids = sorted(REFERENCE_TABLES) if table_id == 'all' else [table_id]

    with engine_errors(ctx):
        rows = [row for tid in table_ids for row in verifier.reproduce_table(tid)]
    click.echo(render_table(fmt, rows, with_table=table_id == 'all'))
    if not all(row.passed for row in rows):
        ctx.exit(EXIT_FAILURE)


@cli.command()
@click.argument('suite', type=click.Choice(list(SUITES) + ['all']))
@common_options
@click.pass_context
def verify(ctx, suite, tol, fmt, seed, max_iter):
    """Run a verification SUITE."""
    settings: Settings = ctx.obj
    tol, fmt, seed, max_iter = settings.resolve(ctx, tol, fmt, seed, max_iter, 'json')
    verifier = Verifier(settings.cfg, tol=tol, max_iter=max_iter)

    with engine_errors(ctx):
        reports = verifier.run(suite, seed=seed)
    click.echo(render_verify(fmt, reports))
    if not all(report.passed for report in reports):
        ctx.exit(EXIT_FAILURE)


def parse_range(text: str) -> List[float]:
    """
    Expand lo:hi:step into lo, lo + step, ... up to hi (inclusive).

    Args:
        text: Range text

    Returns:
        Values rounded to 12 significant digits
    """
    parts = text.split(':')
    if len(parts) != 3:
        raise click.BadParameter(f"expected lo:hi:step, got {text!r}", param_hint='RANGE')
    try:
        lo, hi, step = (float(part) for part in parts)
    except ValueError:
        raise click.BadParameter(f"expected numbers in lo:hi:step, got {text!r}", param_hint='RANGE')
    if not all(math.isfinite(v) for v in (lo, hi, step)) or step <= 0.0 or hi < lo:
        raise click.BadParameter(f"need finite lo <= hi and step > 0, got {text!r}", param_hint='RANGE')

    count = int(math.floor((hi - lo) / step + 1e-9)) + 1
    if count > MAX_SWEEP_POINTS:
        raise click.BadParameter(f"range has more than {MAX_SWEEP_POINTS} points", param_hint='RANGE')
    return [float(format(lo + k * step, '.12g')) for k in range(count)]


def sweep_value(problem_id: str, param: str, value: float) -> Any:
    if param in PROBLEM_CONFIGURATIONS[problem_id]['integer_params']:
        if value != int(value):
            raise click.BadParameter(f"{param} takes integers, got {value!r}", param_hint='RANGE')
        return int(value)
    return value


@cli.command()
@click.argument('problem')
@click.argument('param')
@click.argument('range_text', metavar='RANGE')
@click.argument('fixed', nargs=-1)
@common_options
@click.pass_context
def sweep(ctx, problem, param, range_text, fixed, tol, fmt, seed, max_iter):
    """Radius of PROBLEM as PARAM runs over RANGE (lo:hi:step), FIXED key=value."""
    settings: Settings = ctx.obj
    tol, fmt, seed, max_iter = settings.resolve(ctx, tol, fmt, seed, max_iter, 'plain')
    router = ProblemRouter()
    solver = RootSolver(settings.cfg)

    with engine_errors(ctx):
        base = router.parse_assignments(problem, fixed)
        problem_id = problem.strip().upper()
        if param not in PROBLEM_CONFIGURATIONS[problem_id]['params'] or param == 'poly':
            raise InvalidParameterError(f"{problem_id} cannot sweep parameter {param!r}")
        if param in base:
            raise InvalidParameterError(f"{param} is swept and cannot also be fixed")

        values = [sweep_value(problem_id, param, v) for v in parse_range(range_text)]
        problems = [router.build(problem_id, {**base, param: value}) for value in values]

        with ThreadPoolExecutor(max_workers=settings.cfg.MAX_WORKERS) as executor:
            results = list(executor.map(lambda item: solver.solve(item, tol=tol, max_iter=max_iter), problems))

    click.echo(render_sweep(fmt, problem_id, param, list(zip(values, results))))


@cli.command()
@common_options
@click.pass_context
def problems(ctx, tol, fmt, seed, max_iter):
    """List the radius problems and their parameters."""
    settings: Settings = ctx.obj
    tol, fmt, seed, max_iter = settings.resolve(ctx, tol, fmt, seed, max_iter, 'plain')
    click.echo(render_problems(fmt, ProblemRouter().get_available_problems()))


def main(argv: Optional[List[str]] = None):
    cli.main(args=argv, prog_name='bohr_engine')


if __name__ == '__main__':
    main()
