"""
Wiring of use cases from settings and caller input.

Both front ends build their use cases here: the CLI calls the builders with a
RunConfig, the HTTP routes get them through FastAPI's dependency injection.
Budget values missing from the caller's input come from the settings.
"""

import logging
from functools import lru_cache
from pathlib import Path

from config.settings import Settings, settings

from src.application.analysis import SystemAnalysis
from src.application.analyze_coded import AnalyzeCodedUseCase
from src.application.analyze_graph import AnalyzeGraphUseCase
from src.application.analyze_updown import AnalyzeUpDownUseCase
from src.application.cross_check import CrossCheckUseCase
from src.domain.coded import SGapSpec, coded_from_sofic, sgap_system
from src.domain.exceptions import InvalidSGapSpecError, PreconditionError
from src.domain.graph import LabeledGraph, essentialize
from src.infrastructure.catalog import load_builtin
from src.infrastructure.presentation_file import load_presentation
from src.presentation.schemas import Command, RunConfig

logger = logging.getLogger(__name__)


@lru_cache
def get_settings() -> Settings:
    """Settings instance shared by the HTTP routes."""
    return settings


def load_graph(file: str | None, builtin: str | None) -> tuple[LabeledGraph, str]:
    """
    Load a presentation from a file or the built-in catalog.

    Returns:
        (graph, system name); the name is the file stem or the built-in name
    """
    if file:
        return load_presentation(file), Path(file).stem
    if builtin:
        return load_builtin(builtin), builtin
    raise PreconditionError("either a file or a built-in name is required")


def parse_gaps(text: str) -> list[int]:
    """
    Parse a comma-separated gap list such as "1,2,5".

    Raises:
        InvalidSGapSpecError: If an entry is not an integer
    """
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise InvalidSGapSpecError(f"gap list '{text}' must be comma-separated integers") from e


def build_sgap_spec(
    gaps: str | None, gap_rule: str | None, cutoff: int | None, config: Settings = settings
) -> SGapSpec:
    if gaps:
        return SGapSpec.from_gaps(parse_gaps(gaps))
    if gap_rule:
        return SGapSpec.from_rule(gap_rule, cutoff if cutoff is not None else config.sgap_default_cutoff)
    raise InvalidSGapSpecError("either a gap list or a gap rule is required")


def build_analysis(run: RunConfig, config: Settings = settings) -> SystemAnalysis:
    """Use case for the graph, updown, sgap and coded commands."""
    budget = run.budget or config.profile_budget
    if run.command == Command.UPDOWN:
        return AnalyzeUpDownUseCase(cap=run.cap or config.updown_max_n, profile_budget=budget)
    if run.command == Command.SGAP:
        spec = build_sgap_spec(run.gaps, run.gap_rule, run.cutoff, config)
        return AnalyzeCodedUseCase(sgap_system(spec), profile_budget=budget)

    graph, name = load_graph(run.file, run.builtin)
    if run.command == Command.CODED:
        assert run.separator is not None
        system = coded_from_sofic(essentialize(graph), run.separator, f"{name}+{run.separator}")
        return AnalyzeCodedUseCase(system, profile_budget=budget)
    return AnalyzeGraphUseCase(
        graph, name, profile_budget=budget, node_budget=config.automaton_node_budget
    )


def build_cross_check(run: RunConfig, config: Settings = settings) -> CrossCheckUseCase:
    budget = run.budget or config.profile_budget
    if run.updown:
        return CrossCheckUseCase.for_updown(run.cap or config.updown_max_n, budget)
    graph, name = load_graph(run.file, run.builtin)
    return CrossCheckUseCase.for_graph(graph, name, budget)
