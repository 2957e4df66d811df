"""
Report serialization to CSV and JSON.

JSON is the pydantic dump of the whole document. CSV flattens the part of the
document the report kind is about, one table per document.
"""

import csv
import io
import json
import logging
from enum import StrEnum
from pathlib import Path

from src.application.report import AnalysisReport, CountRow, OracleCheckRow, ReportKind

logger = logging.getLogger(__name__)


class OutputFormat(StrEnum):
    CSV = "csv"
    JSON = "json"


COUNT_COLUMNS = ["system", "n", "side", "exact", "count", "bound_note"]
CRITERIA_COLUMNS = ["system", "criterion", "n", "verdict", "quantities", "citation"]
WITNESS_COLUMNS = ["word", "initial", "closed_form", "agrees"]
ORACLE_CHECK_COLUMNS = ["system", "n", "side", "exact_count", "oracle_count", "depth", "agrees"]


def _cell(value: object) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _csv_table(report: AnalysisReport) -> tuple[list[str], list[list[object]]]:
    kind = report.report
    if kind == ReportKind.CRITERIA:
        return CRITERIA_COLUMNS, [
            [
                report.system,
                row.criterion,
                row.n,
                row.verdict,
                json.dumps(row.quantities, separators=(",", ":")),
                row.citation,
            ]
            for row in report.criteria
        ]
    if kind == ReportKind.WITNESSES:
        return WITNESS_COLUMNS, [
            [row.word, row.initial, row.closed_form, row.agrees] for row in report.witnesses
        ]
    if kind == ReportKind.ORACLE_CHECK:
        return ORACLE_CHECK_COLUMNS, [
            [report.system, row.n, row.side, row.exact_count, row.oracle_count, row.depth, row.agrees]
            for row in report.rows
            if isinstance(row, OracleCheckRow)
        ]
    return COUNT_COLUMNS, [
        [row.system, row.n, row.side, row.exact, row.count, row.bound_note]
        for row in report.rows
        if isinstance(row, CountRow)
    ]


def to_csv(report: AnalysisReport) -> str:
    """CSV text with a header line and Unix line endings."""
    columns, rows = _csv_table(report)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    writer.writerows([_cell(value) for value in row] for row in rows)
    return buffer.getvalue()


def to_json(report: AnalysisReport) -> str:
    return report.model_dump_json(indent=2) + "\n"


def render(report: AnalysisReport, output_format: OutputFormat) -> str:
    if output_format == OutputFormat.JSON:
        return to_json(report)
    return to_csv(report)


def write_report(report: AnalysisReport, output_format: OutputFormat, path: str | Path) -> Path:
    """Write a rendered report to a file, creating parent directories."""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(render(report, output_format), encoding="utf-8")
    logger.info(f"Report written to {target}")
    return target
