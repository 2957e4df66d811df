"""
Brute-force extension profiles over any language oracle.

A depth-d profile is the finite surrogate of a follower, predecessor or
extender set: the length-d extensions of a word. Words with different profiles
have different sets, so profile classes give lower bounds on the true counts.
This module uses nothing but membership queries and serves as the independent
cross-check for the exact engines.
"""

import logging
from typing import NamedTuple

from src.domain.class_table import ClassTable, Side
from src.domain.exceptions import PreconditionError, ProfileBudgetExceededError, WordNotInLanguageError
from src.domain.language import LanguageOracle, enumerate_language
from src.domain.words import Word

logger = logging.getLogger(__name__)

DEFAULT_PROFILE_BUDGET = 2**20

Extension = Word | tuple[Word, Word]


def _extension_key(extension: Extension) -> tuple:
    if isinstance(extension, Word):
        return extension.sort_key()
    prefix, suffix = extension
    return (prefix.sort_key(), suffix.sort_key())


class ExtensionProfile:
    """
    The length-d extensions of a word on one side.

    Attributes:
        word: Profiled word
        side: Follower (u with wu in L), predecessor (u with uw in L) or
            extender ((p, s) with pws in L)
        depth: Extension length d
        extensions: Canonically sorted extensions
    """

    def __init__(self, word: Word, side: Side, depth: int, extensions: list[Extension]):
        self.word = word
        self.side = side
        self.depth = depth
        self.extensions: tuple[Extension, ...] = tuple(sorted(set(extensions), key=_extension_key))

    def truncate(self, depth: int) -> "ExtensionProfile":
        """
        Profile at a smaller depth, cut from this one.

        Extensions are shortened on the side away from the word: followers
        keep their prefix, predecessors their suffix, extenders both.

        Raises:
            PreconditionError: If depth is not in 1..self.depth
        """
        if not 1 <= depth <= self.depth:
            raise PreconditionError(f"cannot truncate a depth-{self.depth} profile to depth {depth}")
        cut: list[Extension]
        if self.side == Side.FOLLOWER:
            cut = [ext[:depth] for ext in self.extensions if isinstance(ext, Word)]
        elif self.side == Side.PREDECESSOR:
            cut = [ext[len(ext) - depth :] for ext in self.extensions if isinstance(ext, Word)]
        else:
            cut = [
                (prefix[len(prefix) - depth :], suffix[:depth])
                for prefix, suffix in self.extensions  # type: ignore[misc]
            ]
        return ExtensionProfile(self.word, self.side, depth, cut)

    def __len__(self) -> int:
        return len(self.extensions)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExtensionProfile):
            return False
        return (self.side, self.depth, self.extensions) == (other.side, other.depth, other.extensions)

    def __hash__(self) -> int:
        return hash((self.side, self.depth, self.extensions))

    def __repr__(self) -> str:
        return (
            f"ExtensionProfile(word={self.word.display()!r}, side={self.side}, "
            f"depth={self.depth}, size={len(self.extensions)})"
        )


def check_profile_budget(oracle: LanguageOracle, side: Side, depth: int, budget: int) -> None:
    """
    Ensure one profile stays within the membership-call budget.

    Raises:
        PreconditionError: If depth < 1
        ProfileBudgetExceededError: If |A|^d (|A|^2d for extenders) exceeds budget
    """
    if depth < 1:
        raise PreconditionError("profile depth must be at least 1")
    exponent = 2 * depth if side == Side.EXTENDER else depth
    requested = len(oracle.alphabet) ** exponent
    if requested > budget:
        raise ProfileBudgetExceededError(requested, budget)


def _right_extensions(oracle: LanguageOracle, word: Word, depth: int) -> list[Word]:
    letters = oracle.alphabet.letters
    level = [Word()]
    for _ in range(depth):
        level = [u + (a,) for u in level for a in letters if oracle.contains(word + u + (a,))]
    return level


def _left_extensions(oracle: LanguageOracle, word: Word, depth: int) -> list[Word]:
    letters = oracle.alphabet.letters
    level = [Word()]
    for _ in range(depth):
        level = [Word((a,)) + u for u in level for a in letters if oracle.contains(Word((a,)) + u + word)]
    return level


def profile(
    oracle: LanguageOracle,
    word: Word,
    side: Side,
    depth: int,
    budget: int = DEFAULT_PROFILE_BUDGET,
) -> ExtensionProfile:
    """
    Compute the depth-d extension profile of a word.

    Extensions are grown one letter at a time, dropping non-members; the
    result equals testing all |A|^d candidates because the language is
    factorial.

    Args:
        oracle: Language to query
        word: A word of the language
        side: Follower, predecessor or extender
        depth: Extension length d >= 1
        budget: Limit on |A|^d, or |A|^2d for extenders

    Raises:
        WordNotInLanguageError: If the word is not in the language
        ProfileBudgetExceededError: If the budget is exceeded
    """
    check_profile_budget(oracle, side, depth, budget)
    if not oracle.contains(word):
        raise WordNotInLanguageError(word.display())

    extensions: list[Extension]
    if side == Side.FOLLOWER:
        extensions = list(_right_extensions(oracle, word, depth))
    elif side == Side.PREDECESSOR:
        extensions = list(_left_extensions(oracle, word, depth))
    else:
        extensions = [
            (prefix, suffix)
            for suffix in _right_extensions(oracle, word, depth)
            for prefix in _left_extensions(oracle, word + suffix, depth)
        ]
    return ExtensionProfile(word, side, depth, extensions)


def classify(
    oracle: LanguageOracle,
    n: int,
    side: Side,
    depth: int,
    budget: int = DEFAULT_PROFILE_BUDGET,
) -> ClassTable[ExtensionProfile]:
    """
    Partition L_n by equality of depth-d profiles.

    The count is a lower bound on the true number of distinct sets and is
    nondecreasing in d.

    Returns:
        ClassTable with exact=False and depth=d
    """
    check_profile_budget(oracle, side, depth, budget)
    labelled = {}
    for word in enumerate_language(oracle, n):
        word_profile = profile(oracle, word, side, depth, budget)
        labelled[word] = (word_profile.extensions, word_profile)
    table = ClassTable.partition(n, side, labelled, exact=False, depth=depth)
    logger.debug(f"{oracle.name} {side} n={n} d={depth}: {len(labelled)} words, {table.count} classes")
    return table


class AxiomViolation(NamedTuple):
    word: Word
    reason: str


def language_axiom_violations(oracle: LanguageOracle, max_length: int) -> list[AxiomViolation]:
    """
    Exhaustively check factoriality and biextendability up to a length.

    Every member of length <= max_length must have its one-letter-shorter
    prefix and suffix in the language and extend by some letter on each side.

    Returns:
        Violations found, empty for a well-formed oracle
    """
    violations = []
    letters = oracle.alphabet.letters
    if not oracle.contains(Word()):
        violations.append(AxiomViolation(Word(), "empty word rejected"))
    for n in range(max_length + 1):
        for word in enumerate_language(oracle, n):
            if word and not (oracle.contains(word[1:]) and oracle.contains(word[:-1])):
                violations.append(AxiomViolation(word, "not factorial"))
            if not any(oracle.contains(Word((a,)) + word) for a in letters):
                violations.append(AxiomViolation(word, "no left extension"))
            if not any(oracle.contains(word + (a,)) for a in letters):
                violations.append(AxiomViolation(word, "no right extension"))
    return violations
