"""
Request schemas and run configuration (DTOs).

Report documents themselves live in src.application.report; the models here
describe what callers send: CLI runs and HTTP request bodies.
"""

from enum import StrEnum

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.application.report import ReportKind
from src.infrastructure.report_writer import OutputFormat


class Command(StrEnum):
    GRAPH = "graph"
    UPDOWN = "updown"
    SGAP = "sgap"
    CODED = "coded"
    ORACLE_CHECK = "oracle-check"


class RunConfig(BaseModel):
    """
    One validated CLI run.

    Built from the parsed argument namespace; budget fields left as None fall
    back to the configured settings.
    """

    model_config = ConfigDict(from_attributes=True, extra="ignore")

    command: Command
    file: str | None = None
    builtin: str | None = None
    updown: bool = False
    gaps: str | None = None
    gap_rule: str | None = None
    cutoff: int | None = Field(None, ge=0)
    separator: str | None = None
    max_n: int = Field(5, ge=1)
    depth: int | None = Field(None, ge=1)
    report: ReportKind = ReportKind.FOLLOWERS
    format: OutputFormat = OutputFormat.CSV
    out: str | None = None
    budget: int | None = Field(None, ge=1)
    cap: int | None = Field(None, ge=1)

    @model_validator(mode="after")
    def check_system_selector(self) -> "RunConfig":
        if self.command in (Command.GRAPH, Command.CODED) and not (self.file or self.builtin):
            raise ValueError(f"'{self.command}' needs --file or --builtin")
        if self.command == Command.CODED and not self.separator:
            raise ValueError("'coded' needs --separator")
        if self.command == Command.SGAP and not (self.gaps or self.gap_rule):
            raise ValueError("'sgap' needs --gaps or --gap-rule")
        if self.command == Command.ORACLE_CHECK and not (self.file or self.builtin or self.updown):
            raise ValueError("'oracle-check' needs --file, --builtin or --updown")
        return self


class GraphReportRequest(BaseModel):
    """Request body for analyzing a presentation sent inline."""

    presentation: str = Field(
        ...,
        description="Presentation file content",
        examples=["alphabet: 0 1\nstates: q0 q1\nedge: q0 0 q0\nedge: q0 1 q1\nedge: q1 0 q0\n"],
    )
    name: str = Field("graph", min_length=1, description="System name used in the report")
    report: ReportKind = Field(ReportKind.FOLLOWERS, description="Report kind")
    max_n: int = Field(5, ge=1, le=12, description="Largest word length")
    depth: int = Field(4, ge=1, le=8, description="Oracle depth for depth-limited counts")


class HealthCheckResponse(BaseModel):
    status: str = Field(..., description="Service status", examples=["healthy"])
    service: str = Field(..., description="Service name")
    version: str = Field(..., description="Service version")


class ErrorResponse(BaseModel):
    """Standard error response schema."""

    error: str = Field(..., description="Error type")
    message: str = Field(..., description="Human-readable error message")
