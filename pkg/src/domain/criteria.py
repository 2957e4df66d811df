"""
Soficity criteria as report-producing checkers.

Each checker evaluates the hypothesis of one sufficient condition for
soficity and reports the quantities it looked at. A certified verdict is only
ever produced from exact counts: depth-limited profiles give lower bounds,
which can refute a hypothesis but never establish one.
"""

import logging
from collections.abc import Hashable, Sequence
from dataclasses import dataclass, field
from enum import StrEnum

from src.domain.exceptions import BudgetExceededError, EngineInconsistencyError, PreconditionError
from src.domain.language import LanguageOracle, enumerate_language
from src.domain.oracle import DEFAULT_PROFILE_BUDGET
from src.domain.sources import FollowerSource
from src.domain.words import Word

logger = logging.getLogger(__name__)

Quantity = int | bool | str


class Verdict(StrEnum):
    CERTIFIED_SOFIC = "certified-sofic"
    HYPOTHESIS_NOT_MET = "hypothesis-not-met"
    NOT_APPLICABLE = "not-applicable"


CITATIONS = {
    "unions": (
        "If every follower set of a word of length n is the follower set of a shorter word, "
        "the shift is sofic."
    ),
    "cumulative": (
        "If at most n distinct follower sets occur among words of length at most n, the shift is sofic."
    ),
    "log": "If |F_X(n)| <= log2(n+1) for some n, the shift is sofic.",
    "full-shift": "If |F_X(n)| = 1 for some n, the shift is a full shift on its active letters.",
    "word-complexity": (
        "If at most n words of length n occur for some n, the shift is a finite union of periodic orbits."
    ),
    "conjecture": (
        "Conjecturally |F_X(n)| <= n for some n implies soficity; the cases n = 1, 2, 3 are proven."
    ),
}

NOT_EXACT_NOTE = "depth-limited counts are lower bounds and cannot certify"


@dataclass
class CriterionReport:
    """
    Outcome of one checker at one length.

    Attributes:
        criterion: Checker id (unions, cumulative, log, full-shift, ...)
        n: Word length examined
        quantities: Counts and bounds the verdict is based on
        verdict: Certified, hypothesis not met, or not applicable
        citation: The sufficient condition being checked
        notes: Free-form remarks, in the order they were found
    """

    criterion: str
    n: int
    quantities: dict[str, Quantity]
    verdict: Verdict
    citation: str
    notes: list[str] = field(default_factory=list)

    @property
    def certified(self) -> bool:
        return self.verdict == Verdict.CERTIFIED_SOFIC


def _report(
    criterion: str,
    n: int,
    quantities: dict[str, Quantity],
    verdict: Verdict,
    notes: list[str] | None = None,
) -> CriterionReport:
    logger.debug(f"{criterion} n={n}: {verdict}")
    return CriterionReport(criterion, n, quantities, verdict, CITATIONS[criterion], notes or [])


def _not_exact(criterion: str, source: FollowerSource, n: int) -> CriterionReport:
    return _report(criterion, n, {"depth": source.depth or 0}, Verdict.NOT_APPLICABLE, [NOT_EXACT_NOTE])


def check_unions(source: FollowerSource, n: int) -> CriterionReport:
    """
    Are all follower classes at length n already present at shorter lengths?

    Raises:
        PreconditionError: If n < 1
    """
    if n < 1:
        raise PreconditionError("the unions criterion needs n >= 1")
    if not source.exact:
        return _not_exact("unions", source, n)

    shorter: dict[Hashable, Word] = {}
    for length in range(n):
        for word, key in source.class_keys(length).items():
            shorter.setdefault(key, word)
    current = source.class_keys(n)
    new_classes: dict[Hashable, Word] = {}
    for word, key in current.items():
        if key not in shorter:
            new_classes.setdefault(key, word)

    quantities: dict[str, Quantity] = {
        "count": len(set(current.values())),
        "shorter_classes": len(shorter),
        "new_classes": len(new_classes),
    }
    if new_classes:
        examples = ", ".join(word.display() for word in new_classes.values())
        return _report("unions", n, quantities, Verdict.HYPOTHESIS_NOT_MET, [f"new classes at {examples}"])
    return _report("unions", n, quantities, Verdict.CERTIFIED_SOFIC)


def check_cumulative(source: FollowerSource, n: int) -> CriterionReport:
    """
    Count follower classes over all lengths 0..n and compare with n.

    Also reports nonempty words sharing the empty word's follower set.
    """
    if not source.exact:
        return _not_exact("cumulative", source, n)

    empty_key = source.class_keys(0)[Word()]
    keys: set[Hashable] = {empty_key}
    like_empty: list[Word] = []
    for length in range(1, n + 1):
        for word, key in source.class_keys(length).items():
            keys.add(key)
            if key == empty_key:
                like_empty.append(word)

    notes = []
    if like_empty:
        shown = ", ".join(word.display() for word in like_empty[:5])
        more = f" and {len(like_empty) - 5} more" if len(like_empty) > 5 else ""
        notes.append(f"same follower set as the empty word: {shown}{more}")
    verdict = Verdict.CERTIFIED_SOFIC if len(keys) <= n else Verdict.HYPOTHESIS_NOT_MET
    return _report("cumulative", n, {"cumulative_count": len(keys), "bound": n}, verdict, notes)


def check_log(count: int, n: int, exact: bool = True) -> CriterionReport:
    """
    Test |F_X(n)| <= log2(n+1) as the integer inequality 2^count <= n + 1.

    Args:
        count: |F_X(n)|
        n: Word length
        exact: Whether count is exact rather than a lower bound
    """
    quantities: dict[str, Quantity] = {"count": count, "n_plus_1": n + 1}
    if not exact:
        return _report("log", n, quantities, Verdict.NOT_APPLICABLE, [NOT_EXACT_NOTE])
    verdict = Verdict.CERTIFIED_SOFIC if 2**count <= n + 1 else Verdict.HYPOTHESIS_NOT_MET
    return _report("log", n, quantities, verdict)


def check_log_for(source: FollowerSource, n: int) -> CriterionReport:
    """check_log applied to a source's count at n."""
    return check_log(source.count(n), n, source.exact)


def check_full_shift(source: FollowerSource, n: int) -> CriterionReport:
    """
    Detect a single follower class at length n.

    A certified verdict is re-verified by checking that every pair of active
    letters is a word of the language.

    Raises:
        EngineInconsistencyError: If the count is 1 but some pair is missing
    """
    if not source.exact:
        return _not_exact("full-shift", source, n)
    count = source.count(n)
    if count != 1:
        return _report("full-shift", n, {"count": count}, Verdict.HYPOTHESIS_NOT_MET)

    language = source.language
    active = [a for a in language.alphabet.letters if language.contains(Word((a,)))]
    missing = [Word((a, b)) for a in active for b in active if not language.contains(Word((a, b)))]
    if missing:
        raise EngineInconsistencyError(
            f"single follower class at n={n} but {missing[0].display()} is not in the language"
        )
    note = "full shift on active alphabet {" + ",".join(active) + "}"
    return _report("full-shift", n, {"count": 1, "active_letters": len(active)}, Verdict.CERTIFIED_SOFIC, [note])


def word_complexity_check(
    oracle: LanguageOracle,
    n_max: int,
    budget: int = DEFAULT_PROFILE_BUDGET,
) -> CriterionReport:
    """
    Compare p(n) = |L_n| with n for n = 1..n_max.

    If p(n) <= n for some n the language is that of finitely many periodic
    orbits; the verdict is then re-verified by checking that every word of
    length n_max has exactly one right extension.

    Raises:
        BudgetExceededError: If some L_n has more than `budget` words
        EngineInconsistencyError: If the re-verification fails
    """
    if n_max < 1:
        raise PreconditionError("word complexity needs n_max >= 1")
    quantities: dict[str, Quantity] = {}
    least: int | None = None
    for n in range(1, n_max + 1):
        words = enumerate_language(oracle, n)
        if len(words) > budget:
            raise BudgetExceededError("Language enumeration", len(words), budget)
        quantities[f"p({n})"] = len(words)
        if least is None and len(words) <= n:
            least = n

    if least is None:
        return _report("word-complexity", n_max, quantities, Verdict.HYPOTHESIS_NOT_MET)

    letters = oracle.alphabet.letters
    for word in enumerate_language(oracle, n_max):
        followers = sum(1 for a in letters if oracle.contains(word + (a,)))
        if followers != 1:
            raise EngineInconsistencyError(
                f"p({least}) <= {least} but {word.display()} has {followers} right extensions"
            )
    quantities["least_n"] = least
    return _report(
        "word-complexity",
        n_max,
        quantities,
        Verdict.CERTIFIED_SOFIC,
        ["periodic: every long word extends uniquely to the right"],
    )


def conjecture_probe(
    counts: Sequence[int],
    sofic_known: bool | None = None,
    exact: bool = True,
) -> CriterionReport:
    """
    Scan |F_X(1)|, |F_X(2)|, ... for the least n with |F_X(n)| <= n.

    Args:
        counts: counts[i] is |F_X(i + 1)|
        sofic_known: True/False when soficity is independently known, None otherwise
        exact: Whether the counts are exact

    Returns:
        Certified when the least such n is at most 3 and the counts are exact.
        A larger n is reported as a prediction. An n found for a system known
        to be nonsofic is flagged as a conjecture violation.
    """
    n_max = len(counts)
    least = next((n for n, count in enumerate(counts, start=1) if count <= n), None)
    quantities: dict[str, Quantity] = {"n_max": n_max, "least_n": least if least is not None else "none"}
    violation = least is not None and sofic_known is False
    quantities["conjecture_violation"] = violation

    notes = []
    if violation:
        notes.append("CONJECTURE VIOLATION: |F_X(n)| <= n on a system known to be nonsofic")
    if not exact:
        notes.append(NOT_EXACT_NOTE)
        return _report("conjecture", n_max, quantities, Verdict.NOT_APPLICABLE, notes)
    if least is None:
        notes.append(f"no n <= {n_max} with |F_X(n)| <= n")
        return _report("conjecture", n_max, quantities, Verdict.HYPOTHESIS_NOT_MET, notes)
    if least <= 3:
        notes.append(f"|F_X({least})| <= {least}: proven case")
        return _report("conjecture", n_max, quantities, Verdict.CERTIFIED_SOFIC, notes)
    notes.append(f"|F_X({least})| <= {least}: predicted sofic, unproven")
    return _report("conjecture", n_max, quantities, Verdict.NOT_APPLICABLE, notes)
