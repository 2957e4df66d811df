"""
Cross-check exact engines against the brute-force oracle.

For every n and side the exact class count is compared with the count of
distinct depth-d profiles. The oracle count is a lower bound, so it may fall
short at small depth; it must never exceed the exact count.
"""

import logging
from collections.abc import Callable

from src.application.report import AnalysisReport, OracleCheckRow, ReportKind
from src.domain import sofic_engine, updown
from src.domain.class_table import ClassTable, Side
from src.domain.exceptions import EngineInconsistencyError, PreconditionError
from src.domain.graph import LabeledGraph, essentialize
from src.domain.language import GraphLanguage, LanguageOracle
from src.domain.oracle import DEFAULT_PROFILE_BUDGET, classify

logger = logging.getLogger(__name__)

ExactTable = Callable[[int, Side], ClassTable]

CHECKED_SIDES = (Side.FOLLOWER, Side.PREDECESSOR)


class CrossCheckUseCase:
    """
    Compare an exact engine with the oracle over one language.

    Args:
        name: System name written into reports
        language: Membership oracle of the same system
        exact_table: (n, side) -> exact ClassTable
        profile_budget: Membership-call budget per profile
    """

    def __init__(
        self,
        name: str,
        language: LanguageOracle,
        exact_table: ExactTable,
        profile_budget: int = DEFAULT_PROFILE_BUDGET,
    ):
        self.name = name
        self.language = language
        self.exact_table = exact_table
        self.profile_budget = profile_budget

    @classmethod
    def for_graph(
        cls, graph: LabeledGraph, name: str = "graph", profile_budget: int = DEFAULT_PROFILE_BUDGET
    ) -> "CrossCheckUseCase":
        essential = essentialize(graph)
        return cls(
            name,
            GraphLanguage(essential, name),
            lambda n, side: sofic_engine.class_table(essential, n, side),
            profile_budget,
        )

    @classmethod
    def for_updown(
        cls, cap: int = updown.DEFAULT_LENGTH_CAP, profile_budget: int = DEFAULT_PROFILE_BUDGET
    ) -> "CrossCheckUseCase":
        def exact_table(n: int, side: Side) -> ClassTable:
            if side == Side.FOLLOWER:
                return updown.ud_follower_table(n, cap)
            return updown.ud_predecessor_table(n, cap)

        return cls("updown", updown.UpDownLanguage(), exact_table, profile_budget)

    def execute(self, max_n: int, depth: int) -> AnalysisReport:
        """
        Build the oracle-check report.

        Raises:
            EngineInconsistencyError: If an oracle count exceeds the exact count
        """
        if max_n < 1:
            raise PreconditionError("max_n must be at least 1")
        rows = []
        for n in range(1, max_n + 1):
            for side in CHECKED_SIDES:
                exact_count = self.exact_table(n, side).count
                oracle_count = classify(self.language, n, side, depth, self.profile_budget).count
                if oracle_count > exact_count:
                    raise EngineInconsistencyError(
                        f"{self.name} {side} n={n}: oracle found {oracle_count} classes, "
                        f"exact engine {exact_count}"
                    )
                rows.append(
                    OracleCheckRow(
                        n=n,
                        side=str(side),
                        exact_count=exact_count,
                        oracle_count=oracle_count,
                        depth=depth,
                        agrees=oracle_count == exact_count,
                    )
                )
        disagreements = sum(1 for row in rows if not row.agrees)
        logger.info(f"{self.name} oracle check d={depth}: {disagreements} row(s) below the exact count")
        return AnalysisReport(
            system=self.name,
            report=str(ReportKind.ORACLE_CHECK),
            exact=False,
            depth=depth,
            rows=rows,
        )
