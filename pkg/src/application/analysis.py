"""
Shared workflow of the analysis use cases.

A use case wraps one system (a finite graph, the up/down/equals shift, a
coded system) and turns a report kind plus a length range into an
AnalysisReport. Subclasses supply the exact engines they have; the
depth-limited oracle parts are common to all of them.
"""

import logging
from abc import ABC, abstractmethod

from src.application.report import AnalysisReport, CountRow, CriterionRow, ReportKind
from src.domain.class_table import Side
from src.domain.criteria import word_complexity_check
from src.domain.exceptions import PreconditionError
from src.domain.language import LanguageOracle, enumerate_language
from src.domain.oracle import DEFAULT_PROFILE_BUDGET, classify

logger = logging.getLogger(__name__)


class SystemAnalysis(ABC):
    """
    Base use case: one system, every report kind.

    Args:
        name: System name written into reports
        profile_budget: Membership-call budget per oracle profile
    """

    def __init__(self, name: str, profile_budget: int = DEFAULT_PROFILE_BUDGET):
        self.name = name
        self.profile_budget = profile_budget

    @property
    @abstractmethod
    def language(self) -> LanguageOracle:
        pass

    def execute(self, report: ReportKind, max_n: int, depth: int) -> AnalysisReport:
        """
        Build one report for lengths 1..max_n.

        Raises:
            PreconditionError: If max_n < 1, depth < 1, or the report kind is
                not available for this system
            BudgetExceededError: If an engine exceeds its budget
        """
        if max_n < 1:
            raise PreconditionError("max_n must be at least 1")
        if depth < 1:
            raise PreconditionError("depth must be at least 1")
        logger.info(f"Analyzing {self.name}: {report} for n=1..{max_n}")

        if report == ReportKind.FOLLOWERS:
            return self.followers(max_n, depth)
        if report == ReportKind.PREDECESSORS:
            return self.predecessors(max_n, depth)
        if report == ReportKind.EXTENDERS:
            return self.oracle_counts(ReportKind.EXTENDERS, Side.EXTENDER, max_n, depth)
        if report == ReportKind.COMPLEXITY:
            return self.complexity(max_n)
        if report == ReportKind.CRITERIA:
            return self.criteria(max_n, depth)
        if report == ReportKind.WITNESSES:
            return self.witnesses(max_n)
        raise PreconditionError(f"report '{report}' is not available for {self.name}")

    @abstractmethod
    def followers(self, max_n: int, depth: int) -> AnalysisReport:
        pass

    @abstractmethod
    def predecessors(self, max_n: int, depth: int) -> AnalysisReport:
        pass

    @abstractmethod
    def criteria(self, max_n: int, depth: int) -> AnalysisReport:
        pass

    def witnesses(self, max_n: int) -> AnalysisReport:
        raise PreconditionError(f"witness reports are not defined for {self.name}")

    def oracle_counts(self, kind: ReportKind, side: Side, max_n: int, depth: int) -> AnalysisReport:
        """Depth-d class counts from the brute-force oracle."""
        rows = [
            CountRow.from_table(self.name, classify(self.language, n, side, depth, self.profile_budget))
            for n in range(1, max_n + 1)
        ]
        return AnalysisReport(system=self.name, report=str(kind), exact=False, depth=depth, rows=rows)

    def complexity(self, max_n: int) -> AnalysisReport:
        """Word counts p(n) and the periodicity check."""
        rows = [
            CountRow(
                system=self.name,
                n=n,
                side="words",
                exact=True,
                count=len(enumerate_language(self.language, n)),
                bound_note="exact",
            )
            for n in range(1, max_n + 1)
        ]
        check = word_complexity_check(self.language, max_n, self.profile_budget)
        return AnalysisReport(
            system=self.name,
            report=str(ReportKind.COMPLEXITY),
            exact=True,
            rows=rows,
            criteria=[CriterionRow.from_report(check)],
        )
