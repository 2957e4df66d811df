"""
Follower-class sources for the soficity checkers (Port + adapters).

A source answers, for any length n, which words of L_n share a follower set,
using keys comparable across lengths. Exact sources (finite graphs, the
up/down/equals calculus) may certify soficity; depth-limited profile sources
can only refute hypotheses.
"""

from abc import ABC, abstractmethod
from collections.abc import Hashable

from src.domain import sofic_engine, updown
from src.domain.class_table import Side
from src.domain.graph import LabeledGraph
from src.domain.language import GraphLanguage, LanguageOracle, enumerate_language
from src.domain.oracle import DEFAULT_PROFILE_BUDGET, check_profile_budget, profile
from src.domain.words import Word


class FollowerSource(ABC):
    """Follower classes of one system, by word length."""

    name: str = "system"
    exact: bool = True
    depth: int | None = None

    @property
    @abstractmethod
    def language(self) -> LanguageOracle:
        """Membership oracle of the system."""
        pass

    @abstractmethod
    def class_keys(self, n: int) -> dict[Word, Hashable]:
        """
        Map every word of L_n to a key of its follower class.

        Equal keys mean equal follower sets (equal depth-d profiles for a
        non-exact source); keys are comparable across lengths.
        """
        pass

    def count(self, n: int) -> int:
        """Number of distinct follower classes at length n."""
        return len(set(self.class_keys(n).values()))


class GraphFollowerSource(FollowerSource):
    def __init__(self, graph: LabeledGraph, name: str = "graph"):
        self._graph = graph
        self._language = GraphLanguage(graph, name)
        self.name = name

    @property
    def language(self) -> LanguageOracle:
        return self._language

    def class_keys(self, n: int) -> dict[Word, Hashable]:
        return dict(sofic_engine.follower_classes(self._graph, n))


class UpDownFollowerSource(FollowerSource):
    """Terminal vertex sets of the up/down/equals shift; exact by the separating witnesses."""

    name = "updown"

    def __init__(self, cap: int = updown.DEFAULT_LENGTH_CAP):
        self._cap = cap
        self._language = updown.UpDownLanguage()

    @property
    def language(self) -> LanguageOracle:
        return self._language

    def class_keys(self, n: int) -> dict[Word, Hashable]:
        if n == 0:
            return {Word(): updown.FULL}
        table = updown.ud_follower_table(n, self._cap)
        return {word: table.representatives[i][1] for word, i in table.assignments.items()}


class ProfileFollowerSource(FollowerSource):
    """Depth-d follower profiles of any oracle; counts are lower bounds only."""

    exact = False

    def __init__(self, oracle: LanguageOracle, depth: int, budget: int = DEFAULT_PROFILE_BUDGET):
        check_profile_budget(oracle, Side.FOLLOWER, depth, budget)
        self._oracle = oracle
        self._budget = budget
        self.depth = depth
        self.name = oracle.name

    @property
    def language(self) -> LanguageOracle:
        return self._oracle

    def class_keys(self, n: int) -> dict[Word, Hashable]:
        return {
            word: profile(self._oracle, word, Side.FOLLOWER, self.depth, self._budget).extensions
            for word in enumerate_language(self._oracle, n)
        }
