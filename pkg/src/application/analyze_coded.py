"""
Analyze a coded system (including S-gap shifts).

Coded systems are reached only through their membership predicate, so every
class count is a depth-limited lower bound and no criterion can certify.
"""

from src.application.analysis import SystemAnalysis
from src.application.report import AnalysisReport, CriterionRow, ReportKind
from src.domain.class_table import Side
from src.domain.coded import CodedSystem
from src.domain.criteria import (
    check_cumulative,
    check_full_shift,
    check_log_for,
    check_unions,
    conjecture_probe,
)
from src.domain.language import LanguageOracle
from src.domain.oracle import DEFAULT_PROFILE_BUDGET
from src.domain.sources import ProfileFollowerSource


class AnalyzeCodedUseCase(SystemAnalysis):
    def __init__(self, system: CodedSystem, profile_budget: int = DEFAULT_PROFILE_BUDGET):
        super().__init__(system.name, profile_budget)
        self.system = system

    @property
    def language(self) -> LanguageOracle:
        return self.system

    def followers(self, max_n: int, depth: int) -> AnalysisReport:
        return self.oracle_counts(ReportKind.FOLLOWERS, Side.FOLLOWER, max_n, depth)

    def predecessors(self, max_n: int, depth: int) -> AnalysisReport:
        return self.oracle_counts(ReportKind.PREDECESSORS, Side.PREDECESSOR, max_n, depth)

    def criteria(self, max_n: int, depth: int) -> AnalysisReport:
        source = ProfileFollowerSource(self.system, depth, self.profile_budget)
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
        counts = [source.count(n) for n in range(1, max_n + 1)]
        reports.append(conjecture_probe(counts, sofic_known=None, exact=False))
        return AnalysisReport(
            system=self.name,
            report=str(ReportKind.CRITERIA),
            exact=False,
            depth=depth,
            criteria=[CriterionRow.from_report(r) for r in reports],
        )
