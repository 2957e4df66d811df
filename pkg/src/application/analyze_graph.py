"""
Analyze a finite labeled-graph presentation.

Follower and predecessor counts are exact (subset construction); extender
counts come from the depth-limited oracle. The criteria report runs every
soficity checker on the exact follower classes.
"""

import logging

from src.application.analysis import SystemAnalysis
from src.application.report import AnalysisReport, CountRow, CriterionRow, ReportKind
from src.domain import sofic_engine
from src.domain.class_table import Side
from src.domain.criteria import (
    check_cumulative,
    check_full_shift,
    check_log_for,
    check_unions,
    conjecture_probe,
)
from src.domain.graph import LabeledGraph, essentialize
from src.domain.language import GraphLanguage, LanguageOracle
from src.domain.oracle import DEFAULT_PROFILE_BUDGET
from src.domain.sources import GraphFollowerSource

logger = logging.getLogger(__name__)


class AnalyzeGraphUseCase(SystemAnalysis):
    """
    Use case for graph presentations.

    The graph is essentialized on construction, so files with stranded
    states are accepted as long as something survives.
    """

    def __init__(
        self,
        graph: LabeledGraph,
        name: str = "graph",
        profile_budget: int = DEFAULT_PROFILE_BUDGET,
        node_budget: int = sofic_engine.DEFAULT_NODE_BUDGET,
    ):
        super().__init__(name, profile_budget)
        self.graph = essentialize(graph)
        self.node_budget = node_budget
        self._language = GraphLanguage(self.graph, name)

    @property
    def language(self) -> LanguageOracle:
        return self._language

    def _exact_counts(self, kind: ReportKind, side: Side, max_n: int) -> AnalysisReport:
        rows = [
            CountRow.from_table(self.name, sofic_engine.class_table(self.graph, n, side))
            for n in range(1, max_n + 1)
        ]
        return AnalysisReport(system=self.name, report=str(kind), exact=True, rows=rows)

    def followers(self, max_n: int, depth: int) -> AnalysisReport:
        return self._exact_counts(ReportKind.FOLLOWERS, Side.FOLLOWER, max_n)

    def predecessors(self, max_n: int, depth: int) -> AnalysisReport:
        return self._exact_counts(ReportKind.PREDECESSORS, Side.PREDECESSOR, max_n)

    def criteria(self, max_n: int, depth: int) -> AnalysisReport:
        source = GraphFollowerSource(self.graph, self.name)
        reports = []
        for n in range(1, max_n + 1):
            reports.extend(
                [
                    check_unions(source, n),
                    check_cumulative(source, n),
                    check_log_for(source, n),
                    check_full_shift(source, n),
                ]
            )

        probe = conjecture_probe(sofic_engine.follower_count_sequence(self.graph, max_n), sofic_known=True)
        automaton = sofic_engine.follower_automaton(self.graph, self.node_budget)
        probe.notes.append(f"follower automaton: {automaton.node_count} follower sets in total")
        reports.append(probe)

        certified = sorted({r.criterion for r in reports if r.certified})
        logger.info(f"{self.name}: certified by {', '.join(certified) or 'no criterion'}")
        return AnalysisReport(
            system=self.name,
            report=str(ReportKind.CRITERIA),
            exact=True,
            criteria=[CriterionRow.from_report(r) for r in reports],
        )
