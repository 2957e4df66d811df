"""
Class tables: partitions of L_n into follower, predecessor or extender classes.

All engines (exact graph engine, the U/D/E calculus, the depth-limited oracle)
report their classification through this one structure, so reports and
checkers never care which engine produced a table.
"""

from collections.abc import Hashable, Mapping
from enum import StrEnum
from typing import Generic, TypeVar

from src.domain.words import Word

K = TypeVar("K")


class Side(StrEnum):
    """Which kind of extension set a table classifies."""

    FOLLOWER = "follower"
    PREDECESSOR = "predecessor"
    EXTENDER = "extender"


class ClassTable(Generic[K]):
    """
    Partition of the words of one length into classes.

    Attributes:
        n: Word length
        side: Follower, predecessor or extender
        assignments: Word -> class id, covering exactly L_n
        representatives: class id -> (least word of the class, its payload)
        exact: False when the count is only a depth-limited lower bound
        depth: Profile depth for depth-limited tables, None for exact ones

    Class ids run from 0 to count - 1 in canonical order of representatives.
    """

    def __init__(
        self,
        n: int,
        side: Side,
        assignments: Mapping[Word, int],
        representatives: Mapping[int, tuple[Word, K]],
        exact: bool = True,
        depth: int | None = None,
    ):
        self.n = n
        self.side = side
        self.assignments = dict(assignments)
        self.representatives = dict(representatives)
        self.exact = exact
        self.depth = depth

    @classmethod
    def partition(
        cls,
        n: int,
        side: Side,
        labelled: Mapping[Word, tuple[Hashable, K]],
        exact: bool = True,
        depth: int | None = None,
    ) -> "ClassTable[K]":
        """
        Build a table from per-word (class key, payload) pairs.

        Words with equal class keys share a class. The representative of a
        class is its least word, carried with that word's payload.

        Args:
            n: Word length
            side: Side of the classification
            labelled: Word -> (class key, payload)
            exact: Whether equal keys exactly mean equal sets
            depth: Profile depth when not exact
        """
        ids: dict[Hashable, int] = {}
        assignments: dict[Word, int] = {}
        representatives: dict[int, tuple[Word, K]] = {}
        for word in sorted(labelled, key=Word.sort_key):
            key, payload = labelled[word]
            if key not in ids:
                ids[key] = len(ids)
                representatives[ids[key]] = (word, payload)
            assignments[word] = ids[key]
        return cls(n, side, assignments, representatives, exact=exact, depth=depth)

    @property
    def count(self) -> int:
        """Number of distinct classes."""
        return len(self.representatives)

    @property
    def words(self) -> list[Word]:
        """The classified words, in canonical order."""
        return sorted(self.assignments, key=Word.sort_key)

    def representative_words(self) -> list[Word]:
        """Least word of every class, by class id."""
        return [self.representatives[i][0] for i in range(self.count)]

    def same_class(self, first: Word, second: Word) -> bool:
        return self.assignments[first] == self.assignments[second]

    def members(self, class_id: int) -> list[Word]:
        """Words assigned to one class, in canonical order."""
        return [w for w in self.words if self.assignments[w] == class_id]

    def __repr__(self) -> str:
        provenance = "exact" if self.exact else f"depth {self.depth}"
        return f"ClassTable(n={self.n}, side={self.side}, count={self.count}, {provenance})"
