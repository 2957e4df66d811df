"""
Language oracle interface (Port).

Every analyzed system, finite presentation or not, is reached through this
membership contract. Engines that only need membership (the brute-force oracle,
the word-complexity checker, coded systems) work against it.
"""

from abc import ABC, abstractmethod

from src.domain.graph import LabeledGraph
from src.domain.words import Alphabet, Word


class LanguageOracle(ABC):
    """
    Membership predicate for the language of a subshift.

    Implementations must describe a factorial, biextendable language: factors
    of members are members, and every member extends by a letter on each side.
    The empty word is a member of every nonempty subshift.
    """

    name: str = "language"

    @property
    @abstractmethod
    def alphabet(self) -> Alphabet:
        """Alphabet of the language."""
        pass

    @abstractmethod
    def contains(self, word: Word) -> bool:
        """
        Decide membership of a finite word.

        Args:
            word: Word over the oracle's alphabet

        Returns:
            True iff the word appears in some point of the subshift
        """
        pass

    def __contains__(self, word: object) -> bool:
        return isinstance(word, Word) and self.contains(word)


class GraphLanguage(LanguageOracle):
    """Language of an essential labeled graph: labels of its finite paths."""

    def __init__(self, graph: LabeledGraph, name: str = "graph"):
        self._graph = graph
        self.name = name

    @property
    def graph(self) -> LabeledGraph:
        return self._graph

    @property
    def alphabet(self) -> Alphabet:
        return self._graph.alphabet

    def contains(self, word: Word) -> bool:
        current = frozenset(self._graph.states)
        for letter in word:
            current = self._graph.image(current, letter)
            if not current:
                return False
        return True


def enumerate_language(oracle: LanguageOracle, n: int) -> list[Word]:
    """
    Enumerate L_n, the words of length n in the language.

    Walks the prefix tree level by level and never extends a non-member, which
    is exact because the language is factorial. Extending in canonical letter
    order keeps every level sorted.

    Args:
        oracle: Language to enumerate
        n: Word length (n >= 0)

    Returns:
        The members of length n, in canonical order
    """
    level = [Word()]
    letters = oracle.alphabet.letters
    for _ in range(n):
        level = [
            extended
            for word in level
            for extended in (word + (letter,) for letter in letters)
            if oracle.contains(extended)
        ]
        if not level:
            break
    return level
