"""
FastAPI routes for follower-set analysis.

Routes are thin: they validate the query or body, build a use case through
dependencies.py and return its report document. Domain errors are mapped to
HTTP status codes in one place.
"""

import logging
from typing import Annotated

from config.settings import Settings
from fastapi import APIRouter, Depends, HTTPException, Query, status

from src.application.analyze_coded import AnalyzeCodedUseCase
from src.application.analyze_graph import AnalyzeGraphUseCase
from src.application.analyze_updown import AnalyzeUpDownUseCase
from src.application.report import AnalysisReport, ReportKind
from src.domain.coded import sgap_system
from src.domain.exceptions import (
    BudgetExceededError,
    DomainError,
    PreconditionError,
    PresentationParseError,
    PresentationValidationError,
)
from src.infrastructure.presentation_file import parse_presentation
from src.presentation.dependencies import build_sgap_spec, get_settings
from src.presentation.schemas import ErrorResponse, GraphReportRequest, HealthCheckResponse

logger = logging.getLogger(__name__)

router = APIRouter(prefix="/api/v1", tags=["analysis"])

ERROR_RESPONSES: dict[int | str, dict] = {
    400: {"model": ErrorResponse, "description": "Invalid input or precondition violated"},
    422: {"model": ErrorResponse, "description": "Computation budget exceeded"},
    500: {"model": ErrorResponse, "description": "Internal server error"},
}

MaxN = Annotated[int, Query(ge=1, le=12, description="Largest word length")]
Depth = Annotated[int | None, Query(ge=1, le=8, description="Oracle depth")]
Report = Annotated[ReportKind, Query(description="Report kind")]


def to_http_error(error: Exception) -> HTTPException:
    """
    Map an exception raised by a use case to an HTTPException.

    Budget errors become 422, other domain errors 400, anything else 500.
    """
    if isinstance(error, BudgetExceededError):
        logger.warning(f"Analysis aborted: {error}")
        return HTTPException(
            status_code=status.HTTP_422_UNPROCESSABLE_ENTITY,
            detail={"error": "BudgetExceeded", "message": str(error)},
        )
    if isinstance(error, PresentationParseError | PresentationValidationError):
        logger.warning(f"Invalid presentation: {error}")
        return HTTPException(
            status_code=status.HTTP_400_BAD_REQUEST,
            detail={"error": "InvalidPresentation", "message": str(error)},
        )
    if isinstance(error, PreconditionError):
        logger.warning(f"Precondition failed: {error}")
        return HTTPException(
            status_code=status.HTTP_400_BAD_REQUEST,
            detail={"error": "PreconditionFailed", "message": str(error)},
        )
    if isinstance(error, DomainError):
        logger.warning(f"Domain error: {error}")
        return HTTPException(
            status_code=status.HTTP_400_BAD_REQUEST,
            detail={"error": "DomainError", "message": str(error)},
        )
    logger.error(f"Unexpected error during analysis: {error}", exc_info=True)
    return HTTPException(
        status_code=status.HTTP_500_INTERNAL_SERVER_ERROR,
        detail={"error": "InternalError", "message": "An unexpected error occurred"},
    )


@router.get(
    "/health",
    response_model=HealthCheckResponse,
    status_code=status.HTTP_200_OK,
    summary="Health check",
    tags=["health"],
)
def health_check(config: Annotated[Settings, Depends(get_settings)]) -> HealthCheckResponse:
    return HealthCheckResponse(status="healthy", service=config.app_name, version=config.app_version)


@router.get(
    "/updown/report",
    response_model=AnalysisReport,
    responses=ERROR_RESPONSES,
    summary="Report on the up/down/equals shift",
)
def updown_report(
    config: Annotated[Settings, Depends(get_settings)],
    report: Report = ReportKind.FOLLOWERS,
    max_n: MaxN = 5,
    depth: Depth = None,
) -> AnalysisReport:
    try:
        use_case = AnalyzeUpDownUseCase(cap=config.updown_max_n, profile_budget=config.profile_budget)
        return use_case.execute(report, max_n, depth or config.default_depth)
    except Exception as e:
        raise to_http_error(e) from e


@router.post(
    "/graphs/report",
    response_model=AnalysisReport,
    responses=ERROR_RESPONSES,
    summary="Report on a graph presentation sent in the body",
)
def graph_report(
    request: GraphReportRequest,
    config: Annotated[Settings, Depends(get_settings)],
) -> AnalysisReport:
    try:
        graph = parse_presentation(request.presentation)
        use_case = AnalyzeGraphUseCase(
            graph,
            request.name,
            profile_budget=config.profile_budget,
            node_budget=config.automaton_node_budget,
        )
        return use_case.execute(request.report, request.max_n, request.depth)
    except Exception as e:
        raise to_http_error(e) from e


@router.get(
    "/sgap/report",
    response_model=AnalysisReport,
    responses=ERROR_RESPONSES,
    summary="Depth-limited report on an S-gap shift",
)
def sgap_report(
    config: Annotated[Settings, Depends(get_settings)],
    gaps: Annotated[str | None, Query(description="Comma-separated gap list", examples=["1,2"])] = None,
    gap_rule: Annotated[str | None, Query(description="powers-of-2, even or odd")] = None,
    cutoff: Annotated[int | None, Query(ge=0, description="Search cutoff for a gap rule")] = None,
    report: Report = ReportKind.FOLLOWERS,
    max_n: MaxN = 5,
    depth: Depth = None,
) -> AnalysisReport:
    try:
        spec = build_sgap_spec(gaps, gap_rule, cutoff, config)
        use_case = AnalyzeCodedUseCase(sgap_system(spec), profile_budget=config.profile_budget)
        return use_case.execute(report, max_n, depth or config.default_depth)
    except Exception as e:
        raise to_http_error(e) from e
