"""Serialization of reports and values for output."""

from __future__ import annotations

import json
from typing import TYPE_CHECKING, Any

from .tiling.helpers import fraction_to_str

if TYPE_CHECKING:
    from fractions import Fraction

    from .verifier import CheckResult, VerificationReport

STATUS_PASS = "pass"
STATUS_FAIL = "FAIL"
STATUS_SKIP = "skip"
STATUS_FINDING = "finding"

TABLE_HEADERS = ("params", "expected", "actual", "status", "note")


def _exact(value: Fraction | None) -> str | None:
    return None if value is None else fraction_to_str(value)


def result_to_dict(result: CheckResult) -> dict[str, Any]:
    """Return one result in the JSON report schema."""

    return {
        "params": dict(result.params),
        "expected": _exact(result.expected),
        "actual": _exact(result.actual),
        "pass": result.passed,
        "skipped": result.skipped,
        "note": result.note,
    }


def report_to_dict(report: VerificationReport) -> dict[str, Any]:
    """Return a report as plain data with exact rational strings."""

    return {
        "suite": report.suite,
        "grid": {name: list(values) for name, values in report.grid.items()},
        "results": [result_to_dict(result) for result in report.results],
        "summary": {**report.summary, "findings_only": report.findings_only},
    }


def report_to_json(report: VerificationReport) -> str:
    """Serialize a report as indented JSON."""

    return json.dumps(report_to_dict(report), indent=2)


def _status(result: CheckResult, findings_only: bool) -> str:
    if result.skipped:
        return STATUS_SKIP
    if result.passed:
        return STATUS_PASS
    return STATUS_FINDING if findings_only else STATUS_FAIL


def report_to_table(report: VerificationReport) -> str:
    """Render a report as an aligned plain-text table with a summary line."""

    rows = [TABLE_HEADERS] + [
        (
            " ".join(f"{name}={value}" for name, value in result.params.items()),
            _exact(result.expected) or "-",
            _exact(result.actual) or "-",
            _status(result, report.findings_only),
            result.note,
        )
        for result in report.results
    ]
    widths = [max(len(row[column]) for row in rows) for column in range(len(TABLE_HEADERS))]
    lines = ["  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip() for row in rows]

    summary = report.summary
    lines.append(
        f"{report.suite}: {summary['passed']} passed, {summary['failed']} "
        f"{'findings' if report.findings_only else 'failed'}, {summary['skipped']} skipped "
        f"of {summary['total']}",
    )
    return "\n".join(lines)


def value_to_dict(subject: str, params: dict[str, int], value: Fraction, **extra: Any) -> dict[str, Any]:
    """Return a single computed value in the JSON output schema."""

    return {"subject": subject, "params": dict(params), "value": fraction_to_str(value), **extra}
