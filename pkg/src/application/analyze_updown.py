"""
Analyze the up/down/equals shift.

Follower and predecessor counts come from the exact vertex-set calculus; the
witness report checks the closed form for initial intervals against the
backward iteration on every word of the witness set.
"""

import logging

from src.application.analysis import SystemAnalysis
from src.application.report import AnalysisReport, CountRow, CriterionRow, ReportKind, WitnessRow
from src.domain import updown
from src.domain.criteria import (
    check_cumulative,
    check_full_shift,
    check_log_for,
    check_unions,
    conjecture_probe,
)
from src.domain.exceptions import ClosedFormPreconditionError
from src.domain.language import LanguageOracle
from src.domain.oracle import DEFAULT_PROFILE_BUDGET
from src.domain.sources import UpDownFollowerSource

logger = logging.getLogger(__name__)


class AnalyzeUpDownUseCase(SystemAnalysis):
    def __init__(
        self,
        cap: int = updown.DEFAULT_LENGTH_CAP,
        profile_budget: int = DEFAULT_PROFILE_BUDGET,
    ):
        super().__init__("updown", profile_budget)
        self.cap = cap
        self._language = updown.UpDownLanguage()

    @property
    def language(self) -> LanguageOracle:
        return self._language

    def followers(self, max_n: int, depth: int) -> AnalysisReport:
        rows = [
            CountRow.from_table(self.name, updown.ud_follower_table(n, self.cap))
            for n in range(1, max_n + 1)
        ]
        return AnalysisReport(system=self.name, report=str(ReportKind.FOLLOWERS), exact=True, rows=rows)

    def predecessors(self, max_n: int, depth: int) -> AnalysisReport:
        rows = [
            CountRow.from_table(self.name, updown.ud_predecessor_table(n, self.cap))
            for n in range(1, max_n + 1)
        ]
        return AnalysisReport(
            system=self.name, report=str(ReportKind.PREDECESSORS), exact=True, rows=rows
        )

    def criteria(self, max_n: int, depth: int) -> AnalysisReport:
        source = UpDownFollowerSource(self.cap)
        reports = []
        counts = []
        for n in range(1, max_n + 1):
            counts.append(source.count(n))
            reports.extend(
                [
                    check_unions(source, n),
                    check_cumulative(source, n),
                    check_log_for(source, n),
                    check_full_shift(source, n),
                ]
            )
        reports.append(conjecture_probe(counts, sofic_known=False))
        return AnalysisReport(
            system=self.name,
            report=str(ReportKind.CRITERIA),
            exact=True,
            criteria=[CriterionRow.from_report(r) for r in reports],
        )

    def witnesses(self, max_n: int) -> AnalysisReport:
        """
        One row per member of the witness set of length max_n.

        Each word is v s with s = D^(ceil(n/2) - 1) E; the closed form is
        evaluated on v with seed I(s) and compared with I(v s).
        """
        n = max_n
        suffix = updown.witness_suffix(n)
        seed = updown.ud_initial(suffix)
        rows = []
        for word in updown.ud_witness_set(n):
            initial = updown.ud_initial(word)
            v = word[: len(word) - len(suffix)]
            try:
                closed = updown.ud_closed_form(v, seed)
            except ClosedFormPreconditionError as e:
                logger.warning(f"Closed form not applicable to {word.display()}: {e.reason}")
                rows.append(WitnessRow(word=str(word), initial=str(initial), closed_form="n/a", agrees=False))
                continue
            rows.append(
                WitnessRow(
                    word=str(word),
                    initial=str(initial),
                    closed_form=str(closed),
                    agrees=closed == initial,
                )
            )
        logger.info(f"updown witness set n={n}: {len(rows)} words")
        return AnalysisReport(system=self.name, report=str(ReportKind.WITNESSES), exact=True, witnesses=rows)
