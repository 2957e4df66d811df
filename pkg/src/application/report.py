"""
Report documents produced by the analysis use cases.

Every use case returns one AnalysisReport. The field order of each model is
the key order of the JSON document, and nothing in a report depends on the
time or order of evaluation, so identical runs produce identical bytes.
"""

from enum import StrEnum

from pydantic import BaseModel, ConfigDict, Field

from src.domain.class_table import ClassTable
from src.domain.criteria import CriterionReport


class ReportKind(StrEnum):
    FOLLOWERS = "followers"
    PREDECESSORS = "predecessors"
    EXTENDERS = "extenders"
    COMPLEXITY = "complexity"
    CRITERIA = "criteria"
    WITNESSES = "witnesses"
    ORACLE_CHECK = "oracle-check"


EXACT_NOTE = "exact"


def lower_bound_note(depth: int | None) -> str:
    return f"lower bound (depth {depth})"


class CountRow(BaseModel):
    """Number of classes of one side at one length."""

    system: str
    n: int
    side: str
    exact: bool
    count: int
    bound_note: str
    representatives: list[str] = Field(default_factory=list)

    @classmethod
    def from_table(cls, system: str, table: ClassTable) -> "CountRow":
        return cls(
            system=system,
            n=table.n,
            side=str(table.side),
            exact=table.exact,
            count=table.count,
            bound_note=EXACT_NOTE if table.exact else lower_bound_note(table.depth),
            representatives=[word.display() for word in table.representative_words()],
        )


class CriterionRow(BaseModel):
    model_config = ConfigDict(from_attributes=True)

    criterion: str
    n: int
    quantities: dict[str, int | bool | str]
    verdict: str
    citation: str
    notes: list[str] = Field(default_factory=list)

    @classmethod
    def from_report(cls, report: CriterionReport) -> "CriterionRow":
        row = cls.model_validate(report)
        row.verdict = str(report.verdict)
        return row


class WitnessRow(BaseModel):
    """Initial interval of a witness word, by iteration and in closed form."""

    word: str
    initial: str
    closed_form: str
    agrees: bool


class OracleCheckRow(BaseModel):
    """Exact count next to the depth-limited oracle count."""

    n: int
    side: str
    exact_count: int
    oracle_count: int
    depth: int
    agrees: bool


class AnalysisReport(BaseModel):
    """
    One report document.

    Attributes:
        system: Name of the analyzed system
        report: Report kind
        exact: Whether every count in the document is exact
        depth: Oracle depth used, None when nothing was depth-limited
    """

    system: str
    report: str
    exact: bool
    depth: int | None = None
    rows: list[CountRow | OracleCheckRow] = Field(default_factory=list)
    criteria: list[CriterionRow] = Field(default_factory=list)
    witnesses: list[WitnessRow] = Field(default_factory=list)
