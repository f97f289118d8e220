"""
Reporting - Renders solver results, table rows, suite reports and sweeps as
json, csv or plain text
"""

import csv
import io
import json
from typing import Any, Dict, List, Sequence

from config import Config

from .problems import BaseProblem
from .root_solver import RootResult
from .verification import SuiteReport, TableRow


FORMATS = ('json', 'csv', 'plain')

TABLE_COLUMNS = ['expected', 'computed', 'delta', 'residual', 'pass']
SOLVE_COLUMNS = ['problem', 'params', 'radius', 'residual', 'bracket_lo', 'bracket_hi',
                 'iterations', 'monotone_certified']
VERIFY_COLUMNS = ['suite', 'case', 'metric', 'passed', 'advisory']


def format_number(value: float, digits: int = Config.OUTPUT_DIGITS) -> str:
    return format(value, f'.{digits}g')


def round_floats(value: Any, digits: int = Config.OUTPUT_DIGITS) -> Any:
    """Round every float in a JSON-like document to `digits` significant digits."""
    if isinstance(value, bool):
        return value
    if isinstance(value, float):
        return float(format_number(value, digits))
    if isinstance(value, dict):
        return {key: round_floats(item, digits) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [round_floats(item, digits) for item in value]
    return value


def cell(value: Any) -> str:
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, float):
        return format_number(value)
    return str(value)


def render_json(document: Any) -> str:
    return json.dumps(round_floats(document), indent=2)


def render_csv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    writer.writerows([cell(value) for value in row] for row in rows)
    return buffer.getvalue().rstrip('\n')


def render_plain(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    """Left-aligned columns separated by two spaces."""
    table = [list(header)] + [[cell(value) for value in row] for row in rows]
    widths = [max(len(line[i]) for line in table) for i in range(len(header))]
    return '\n'.join(
        '  '.join(text.ljust(width) for text, width in zip(line, widths)).rstrip()
        for line in table
    )


def render(fmt: str, document: Any, header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    if fmt == 'json':
        return render_json(document)
    if fmt == 'csv':
        return render_csv(header, rows)
    return render_plain(header, rows)


# solve

def solve_document(problem: BaseProblem, result: RootResult) -> Dict[str, Any]:
    document = problem.to_dict()
    document.update(result.to_dict())
    return document


def solve_rows(problem: BaseProblem, result: RootResult) -> List[List[Any]]:
    params = ' '.join(problem.label().split(' ')[1:])
    return [[problem.problem_id, params, result.radius, result.residual,
             result.final_bracket.lo, result.final_bracket.hi,
             result.iterations, result.monotone_certified]]


def render_solve(fmt: str, problem: BaseProblem, result: RootResult) -> str:
    if fmt == 'plain':
        lines = [
            f"problem: {problem.label()}",
            f"radius: {cell(result.radius)}",
            f"residual: {cell(result.residual)}",
            f"bracket: [{cell(result.final_bracket.lo)}, {cell(result.final_bracket.hi)}]",
            f"iterations: {result.iterations}",
            f"monotone_certified: {cell(result.monotone_certified)}"
        ]
        return '\n'.join(lines)
    return render(fmt, solve_document(problem, result), SOLVE_COLUMNS, solve_rows(problem, result))


# table

def table_columns(rows: Sequence[TableRow], with_table: bool) -> List[str]:
    """Union of the parameter names, widest parameter set first."""
    columns: List[str] = []
    for names in sorted((list(row.problem.params()) for row in rows), key=len, reverse=True):
        for name in names:
            if name not in columns:
                columns.append(name)
    return (['table'] if with_table else []) + columns


def render_table(fmt: str, rows: Sequence[TableRow], with_table: bool = False) -> str:
    """
    Columns: (table,) parameters, expected, computed, delta, residual, pass.
    With several tables the parameter columns are the union, blank when absent.
    """
    columns = table_columns(rows, with_table)
    param_columns = columns[1:] if with_table else columns

    body = []
    for row in rows:
        params = row.problem.params()
        line = [row.table_id] if with_table else []
        line += [params.get(name) for name in param_columns]
        line += [row.expected_radius, row.computed_radius, row.abs_delta, row.residual, row.passed]
        body.append(line)

    document = {
        'rows': [
            {
                'table': row.table_id,
                **row.problem.to_dict(),
                'expected': row.expected_radius,
                'reference': row.reference_radius,
                'computed': row.computed_radius,
                'delta': row.abs_delta,
                'residual': row.residual,
                'pass': row.passed
            }
            for row in rows
        ],
        'passed': all(row.passed for row in rows)
    }
    return render(fmt, document, columns + TABLE_COLUMNS, body)


# verify

def render_verify(fmt: str, reports: Sequence[SuiteReport]) -> str:
    document = {
        'suites': [report.to_dict() for report in reports],
        'passed': all(report.passed for report in reports)
    }
    body = [
        [report.name, entry.case, entry.metric, entry.passed, entry.advisory]
        for report in reports
        for entry in report.entries
    ]
    return render(fmt, document, VERIFY_COLUMNS, body)


# sweep

def render_sweep(fmt: str, problem_id: str, param: str, points: Sequence[Sequence[Any]]) -> str:
    """points: (parameter value, RootResult) pairs in input order."""
    document = {
        'problem': problem_id,
        'param': param,
        'rows': [{param: value, 'radius': result.radius} for value, result in points]
    }
    body = [[value, result.radius] for value, result in points]
    return render(fmt, document, [param, 'radius'], body)


# problems

PROBLEM_COLUMNS = ['problem', 'name', 'mapping_class', 'params', 'target']


def render_problems(fmt: str, problems: Sequence[Dict[str, Any]]) -> str:
    """problems: entries of ProblemRouter.get_available_problems()."""
    document = {'problems': list(problems), 'total_count': len(problems)}
    body = [
        [info['problem'], info['name'], info['mapping_class'], ' '.join(info['params']), info['target']]
        for info in problems
    ]
    return render(fmt, document, PROBLEM_COLUMNS, body)
