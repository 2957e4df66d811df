"""
Coded subshifts with a separator letter, and S-gap shifts.

A coded system Y is presented by a set W of words over a base alphabet and a
fresh separator letter c: the points of Y are the bi-infinite concatenations
of code words wc. A finite word is in L(Y) iff its separator-free segments fit
the code: the first segment is a suffix of some w, the interior ones are in W,
the last one is a prefix of some w.
"""

import logging
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field

from src.domain.exceptions import (
    CutoffExceededError,
    InvalidSGapSpecError,
    PreconditionError,
    SeparatorCollisionError,
)
from src.domain.graph import LabeledGraph
from src.domain.language import GraphLanguage, LanguageOracle, enumerate_language
from src.domain.words import Alphabet, Word

logger = logging.getLogger(__name__)

WordPredicate = Callable[[Word], bool]

SGAP_ZERO = "0"
SGAP_SEPARATOR = "1"


class CodedSystem(LanguageOracle):
    """
    Coded subshift defined by four predicates on separator-free words.

    Attributes:
        separator: Separator letter c, absent from the base alphabet
        base_alphabet: Alphabet of the code words without their separator
        is_in_W: Membership in W
        is_W_prefix: Prefix of some word of W
        is_W_suffix: Suffix of some word of W
        is_cfree_factor: Separator-free word of L(Y)
    """

    def __init__(
        self,
        separator: str,
        base_alphabet: Alphabet,
        is_in_W: WordPredicate,
        is_W_prefix: WordPredicate,
        is_W_suffix: WordPredicate,
        is_cfree_factor: WordPredicate,
        name: str = "coded",
    ):
        """
        Initialize a CodedSystem.

        Raises:
            SeparatorCollisionError: If the separator is a base letter
        """
        if separator in base_alphabet:
            raise SeparatorCollisionError(separator)
        self.separator = separator
        self.base_alphabet = base_alphabet
        self.is_in_W = is_in_W
        self.is_W_prefix = is_W_prefix
        self.is_W_suffix = is_W_suffix
        self.is_cfree_factor = is_cfree_factor
        self.name = name
        self._alphabet = base_alphabet.with_letter(separator)

    @property
    def alphabet(self) -> Alphabet:
        return self._alphabet

    def contains(self, word: Word) -> bool:
        return coded_membership(self, word)

    def segments(self, word: Word) -> list[Word]:
        """Split a word at every separator; a word with m separators has m + 1 segments."""
        pieces: list[Word] = []
        start = 0
        for index, letter in enumerate(word):
            if letter == self.separator:
                pieces.append(word[start:index])
                start = index + 1
        pieces.append(word[start:])
        return pieces


def coded_membership(system: CodedSystem, word: Word) -> bool:
    """
    Decide membership of a finite word in the coded subshift.

    Args:
        system: Coded system
        word: Word over the base alphabet plus the separator

    Returns:
        True iff the word occurs in a concatenation of code words

    Raises:
        UnknownLetterError: If the word has a letter outside the combined alphabet
    """
    system.alphabet.check_word(word)
    segments = system.segments(word)
    if len(segments) == 1:
        return system.is_cfree_factor(word)
    first, *interior, last = segments
    return (
        system.is_W_suffix(first)
        and all(system.is_in_W(segment) for segment in interior)
        and system.is_W_prefix(last)
    )


def normalize_after_separator(word: Word, separator: str) -> Word:
    """
    Cut a word down to its suffix starting at the last separator.

    In a coded system the follower set of ucv equals that of cv, so both
    words have the same extension profiles.

    Raises:
        PreconditionError: If the word has no separator
    """
    for index in range(len(word) - 1, -1, -1):
        if word[index] == separator:
            return word[index:]
    raise PreconditionError(f"word '{word.display()}' contains no separator '{separator}'")


def coded_from_sofic(graph: LabeledGraph, separator: str, name: str | None = None) -> CodedSystem:
    """
    Coded system over a sofic base X with W = L(X).

    Every word of L(X) is a suffix of itself, and L(X) is factorial, so all
    four predicates are membership in L(X).

    Args:
        graph: Essential presentation of the base shift
        separator: Fresh separator letter
        name: System name used in reports

    Raises:
        SeparatorCollisionError: If the separator is a letter of the graph
    """
    base = GraphLanguage(graph)
    if separator in graph.alphabet:
        raise SeparatorCollisionError(separator)
    return CodedSystem(
        separator=separator,
        base_alphabet=graph.alphabet,
        is_in_W=base.contains,
        is_W_prefix=base.contains,
        is_W_suffix=base.contains,
        is_cfree_factor=base.contains,
        name=name or f"coded({separator})",
    )


def _powers_of_two(s: int) -> bool:
    return s > 0 and s & (s - 1) == 0


GAP_RULES: dict[str, Callable[[int], bool]] = {
    "powers-of-2": _powers_of_two,
    "even": lambda s: s % 2 == 0,
    "odd": lambda s: s % 2 == 1,
}


@dataclass(frozen=True)
class SGapSpec:
    """
    Set S of allowed gaps between consecutive 1s, given as a predicate.

    Attributes:
        gap_predicate: s -> whether s is in S
        enumeration_cutoff: Largest gap value any search may inspect
        bounded: True when S has no element above the cutoff (finite lists)
        description: Human-readable form of S used in report names
    """

    gap_predicate: Callable[[int], bool]
    enumeration_cutoff: int
    bounded: bool = False
    description: str = field(default="S")

    def __post_init__(self) -> None:
        if self.enumeration_cutoff < 0:
            raise InvalidSGapSpecError("cutoff must be nonnegative")
        if not self.gaps():
            raise InvalidSGapSpecError(f"no gap up to cutoff {self.enumeration_cutoff}")

    @classmethod
    def from_gaps(cls, gaps: Iterable[int]) -> "SGapSpec":
        """
        Spec for an explicit finite set of gaps.

        Raises:
            InvalidSGapSpecError: If the set is empty or has a negative gap
        """
        allowed = frozenset(gaps)
        if not allowed:
            raise InvalidSGapSpecError("the gap set is empty")
        if min(allowed) < 0:
            raise InvalidSGapSpecError("gaps must be nonnegative")
        return cls(
            gap_predicate=allowed.__contains__,
            enumeration_cutoff=max(allowed),
            bounded=True,
            description="S={" + ",".join(str(s) for s in sorted(allowed)) + "}",
        )

    @classmethod
    def from_rule(cls, rule: str, cutoff: int) -> "SGapSpec":
        """
        Spec for a named infinite gap set, searched up to `cutoff`.

        Raises:
            InvalidSGapSpecError: If the rule is unknown
        """
        predicate = GAP_RULES.get(rule)
        if predicate is None:
            known = ", ".join(sorted(GAP_RULES))
            raise InvalidSGapSpecError(f"unknown gap rule '{rule}' (known: {known})")
        return cls(gap_predicate=predicate, enumeration_cutoff=cutoff, description=f"S={rule}")

    def gaps(self) -> list[int]:
        """Elements of S up to the cutoff."""
        return [s for s in range(self.enumeration_cutoff + 1) if self.gap_predicate(s)]

    def has_gap_at_least(self, j: int) -> bool:
        """
        Whether some s >= j lies in S.

        Raises:
            CutoffExceededError: If S is unbounded and no such s exists up to
                the cutoff, so the answer depends on values beyond it
        """
        if any(self.gap_predicate(s) for s in range(j, self.enumeration_cutoff + 1)):
            return True
        if self.bounded:
            return False
        raise CutoffExceededError(j, self.enumeration_cutoff)


def _zero_run_length(word: Word) -> int | None:
    if all(letter == SGAP_ZERO for letter in word):
        return len(word)
    return None


def sgap_system(spec: SGapSpec) -> CodedSystem:
    """
    The S-gap shift as a coded system over the base {0^inf} with separator 1.

    Code words are 0^s 1 for s in S. Predicates applied to anything other
    than a power of 0 answer False.
    """

    def is_in_W(word: Word) -> bool:
        j = _zero_run_length(word)
        if j is None:
            return False
        if j > spec.enumeration_cutoff:
            if spec.bounded:
                return False
            raise CutoffExceededError(j, spec.enumeration_cutoff)
        return spec.gap_predicate(j)

    def fits_in_gap(word: Word) -> bool:
        j = _zero_run_length(word)
        return j is not None and spec.has_gap_at_least(j)

    return CodedSystem(
        separator=SGAP_SEPARATOR,
        base_alphabet=Alphabet((SGAP_ZERO,)),
        is_in_W=is_in_W,
        is_W_prefix=fits_in_gap,
        is_W_suffix=fits_in_gap,
        is_cfree_factor=fits_in_gap,
        name=f"sgap({spec.description})",
    )


def last_separator_partition(system: CodedSystem, n: int) -> dict[int, list[Word]]:
    """
    Partition L_n(Y) by the position of the last separator.

    Returns:
        k -> words of L_n(Y) whose last separator is followed by exactly
        k - 1 letters (k = 1..n), and 0 -> separator-free words. Every key
        0..n is present, possibly with an empty list.
    """
    parts: dict[int, list[Word]] = {k: [] for k in range(n + 1)}
    for word in enumerate_language(system, n):
        try:
            tail = normalize_after_separator(word, system.separator)
        except PreconditionError:
            parts[0].append(word)
        else:
            parts[len(tail)].append(word)
    logger.debug(f"{system.name}: last-separator partition of L_{n} computed")
    return parts
