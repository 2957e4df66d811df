"""
Exact follower/predecessor classification for finite labeled graphs.

The follower set of a word w is determined by T(w), the set of terminal states
of paths labeled w. On an essential graph two words have the same follower set
iff the finite path languages leaving their terminal sets coincide, which is
decided on the subset construction with the empty set as rejecting sink.

Predecessor sets are handled by running the same machinery on the reversed
graph.
"""

import logging
import threading
from collections import deque
from collections.abc import Iterator
from functools import lru_cache

from src.domain.class_table import ClassTable, Side
from src.domain.exceptions import NodeBudgetExceededError, PreconditionError
from src.domain.graph import LabeledGraph, StateSet
from src.domain.words import Word

logger = logging.getLogger(__name__)

DEFAULT_NODE_BUDGET = 10_000


def _require_essential(graph: LabeledGraph) -> None:
    if not graph.is_essential():
        raise PreconditionError("graph must be essential; call essentialize() first")


def transition(graph: LabeledGraph, states: StateSet, letter: str) -> StateSet:
    """
    Subset-construction step.

    Args:
        graph: Labeled graph
        states: Current set of states
        letter: Letter to read

    Returns:
        All targets of `letter`-edges leaving `states`; empty when none applies
    """
    return graph.image(states, letter)


def _terminal_levels(graph: LabeledGraph, n: int) -> Iterator[dict[Word, StateSet]]:
    """Yield the terminal-set maps of lengths 0, 1, ..., n."""
    level = {Word(): graph.full_state_set}
    yield level
    letters = graph.alphabet.letters
    for _ in range(n):
        next_level: dict[Word, StateSet] = {}
        for word, states in level.items():
            for letter in letters:
                image = graph.image(states, letter)
                if image:
                    next_level[word + (letter,)] = image
        level = next_level
        yield level


def terminal_sets(graph: LabeledGraph, n: int) -> dict[Word, StateSet]:
    """
    Map every word of L_n to its terminal state set.

    Words are extended breadth-first and dropped as soon as their image is
    empty, so the keys are exactly L_n, in canonical order.

    Args:
        graph: Essential labeled graph
        n: Word length (n >= 0)

    Returns:
        Word -> terminal StateSet
    """
    _require_essential(graph)
    level: dict[Word, StateSet] = {}
    for level in _terminal_levels(graph, n):
        pass
    return level


def languages_equal(graph: LabeledGraph, first: StateSet, second: StateSet) -> bool:
    """
    Decide whether two state sets generate the same finite path languages.

    Explores the product of the two subset constructions. A reachable pair in
    which exactly one side is the empty set is a distinguishing word; if none
    exists the languages are equal. Terminates after at most the square of the
    number of reachable subsets.

    Args:
        graph: Essential labeled graph
        first: First state set
        second: Second state set

    Returns:
        True iff the path-label languages from both sets coincide
    """
    if first == second:
        return True
    if bool(first) != bool(second):
        return False

    letters = graph.alphabet.letters
    seen = {(first, second)}
    queue = deque([(first, second)])
    while queue:
        left, right = queue.popleft()
        for letter in letters:
            left_next = graph.image(left, letter)
            right_next = graph.image(right, letter)
            if bool(left_next) != bool(right_next):
                return False
            if left_next and left_next != right_next and (left_next, right_next) not in seen:
                seen.add((left_next, right_next))
                queue.append((left_next, right_next))
    return True


class FollowerClassifier:
    """
    Assigns class ids to state sets, merging sets with equal path languages.

    Ids are stable for the classifier's lifetime and comparable across word
    lengths, which is what cumulative counts and the unions criterion need.
    Classifiers are cached per graph and shared by request threads, so
    lookups and new classes are serialized.
    """

    def __init__(self, graph: LabeledGraph):
        self._graph = graph
        self._representatives: list[StateSet] = []
        self._ids: dict[StateSet, int] = {}
        self._lock = threading.Lock()

    @property
    def representatives(self) -> list[StateSet]:
        """One state set per class discovered so far, by class id."""
        with self._lock:
            return list(self._representatives)

    def class_id(self, states: StateSet) -> int:
        """Return the class id of a state set, opening a new class if needed."""
        with self._lock:
            known = self._ids.get(states)
            if known is not None:
                return known
            for class_id, representative in enumerate(self._representatives):
                if languages_equal(self._graph, states, representative):
                    self._ids[states] = class_id
                    return class_id
            class_id = len(self._representatives)
            self._representatives.append(states)
            self._ids[states] = class_id
            return class_id


@lru_cache(maxsize=64)
def _classifier_for(graph: LabeledGraph) -> FollowerClassifier:
    return FollowerClassifier(graph)


def _oriented(graph: LabeledGraph, side: Side) -> LabeledGraph:
    if side == Side.FOLLOWER:
        return graph
    if side == Side.PREDECESSOR:
        return _reversed(graph)
    raise PreconditionError("extender sets are only classified at finite depth by the oracle")


@lru_cache(maxsize=64)
def _reversed(graph: LabeledGraph) -> LabeledGraph:
    return graph.reversed()


def class_table(graph: LabeledGraph, n: int, side: Side = Side.FOLLOWER) -> ClassTable[StateSet]:
    """
    Exact partition of L_n by follower or predecessor set.

    Args:
        graph: Essential labeled graph
        n: Word length
        side: Side.FOLLOWER or Side.PREDECESSOR

    Returns:
        ClassTable whose payloads are terminal sets (follower side) or
        initial sets (predecessor side)

    Decision: The predecessor side classifies the reversed words of the
    reversed graph; the terminal set of a reversed word there is the initial
    set of the word here.
    """
    _require_essential(graph)
    oriented = _oriented(graph, side)
    classifier = _classifier_for(oriented)
    labelled: dict[Word, tuple[int, StateSet]] = {}
    for word, states in terminal_sets(oriented, n).items():
        original = word if side == Side.FOLLOWER else Word(reversed(word))
        labelled[original] = (classifier.class_id(states), states)
    table = ClassTable.partition(n, side, labelled)
    logger.debug(f"{side} table n={n}: {len(labelled)} words, {table.count} classes")
    return table


def follower_classes(graph: LabeledGraph, n: int) -> dict[Word, int]:
    """
    Word -> follower class id for every word of L_n.

    Ids come from one classifier per graph, so they are comparable across
    word lengths (unlike the per-table ids of class_table).
    """
    _require_essential(graph)
    classifier = _classifier_for(graph)
    return {word: classifier.class_id(states) for word, states in terminal_sets(graph, n).items()}


def shortening_witnesses(graph: LabeledGraph, n: int) -> dict[Word, Word | None]:
    """
    Find, for each w in L_n, the least shorter word with the same follower set.

    Args:
        graph: Essential labeled graph
        n: Word length

    Returns:
        Word -> least word of length < n in the same follower class, or None
        when w is not shortenable
    """
    _require_essential(graph)
    classifier = _classifier_for(graph)
    shorter: dict[int, Word] = {}
    witnesses: dict[Word, Word | None] = {}
    for length, level in enumerate(_terminal_levels(graph, n)):
        if length < n:
            for word, states in level.items():
                shorter.setdefault(classifier.class_id(states), word)
        else:
            witnesses = {word: shorter.get(classifier.class_id(s)) for word, s in level.items()}
    return witnesses


def unions_criterion(graph: LabeledGraph, n: int) -> bool:
    """
    True iff every follower set of a length-n word is that of a shorter word.

    When this holds for some n >= 1 the shift is sofic.
    """
    if n < 1:
        raise PreconditionError("the unions criterion needs n >= 1")
    return all(w is not None for w in shortening_witnesses(graph, n).values())


def cumulative_follower_count(graph: LabeledGraph, n: int) -> int:
    """Number of distinct follower sets among all words of length <= n."""
    _require_essential(graph)
    classifier = _classifier_for(graph)
    return len(
        {
            classifier.class_id(states)
            for level in _terminal_levels(graph, n)
            for states in level.values()
        }
    )


def follower_count_sequence(graph: LabeledGraph, n_max: int) -> list[int]:
    """Exact |F_X(n)| for n = 1..n_max."""
    _require_essential(graph)
    classifier = _classifier_for(graph)
    counts = []
    for length, level in enumerate(_terminal_levels(graph, n_max)):
        if length:
            counts.append(len({classifier.class_id(states) for states in level.values()}))
    return counts


class FollowerAutomaton:
    """
    Deterministic automaton whose nodes are the distinct follower sets.

    Node 0 is the follower set of the empty word. A missing transition means
    the letter cannot follow any word of that class.
    """

    def __init__(
        self,
        nodes: list[StateSet],
        transitions: dict[tuple[int, str], int],
        initial: int = 0,
    ):
        self.nodes = nodes
        self.transitions = transitions
        self.initial = initial

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    def run(self, word: Word) -> int | None:
        """Node reached by reading `word` from the initial node, or None."""
        node: int | None = self.initial
        for letter in word:
            node = self.transitions.get((node, letter))
            if node is None:
                return None
        return node

    def __repr__(self) -> str:
        return f"FollowerAutomaton(nodes={self.node_count}, transitions={len(self.transitions)})"


def follower_automaton(
    graph: LabeledGraph, node_budget: int = DEFAULT_NODE_BUDGET
) -> FollowerAutomaton:
    """
    Build the follower automaton of an essential graph.

    Explores state sets reachable from the full state set, merging sets with
    equal path languages into one node. Only one representative per node is
    expanded: equal follower sets stay equal after appending a letter.

    Args:
        graph: Essential labeled graph
        node_budget: Maximum number of nodes before giving up

    Returns:
        FollowerAutomaton whose node count is the number of follower sets

    Raises:
        NodeBudgetExceededError: If exploration exceeds `node_budget` nodes
    """
    _require_essential(graph)
    classifier = FollowerClassifier(graph)
    nodes: list[StateSet] = []
    transitions: dict[tuple[int, str], int] = {}
    node_of_class: dict[int, int] = {}

    def node_for(states: StateSet) -> tuple[int, bool]:
        class_id = classifier.class_id(states)
        if class_id in node_of_class:
            return node_of_class[class_id], False
        if len(nodes) >= node_budget:
            raise NodeBudgetExceededError(len(nodes) + 1, node_budget)
        node_of_class[class_id] = len(nodes)
        nodes.append(states)
        return node_of_class[class_id], True

    initial, _ = node_for(graph.full_state_set)
    queue = deque([initial])
    while queue:
        node = queue.popleft()
        for letter in graph.alphabet.letters:
            image = graph.image(nodes[node], letter)
            if not image:
                continue
            target, is_new = node_for(image)
            transitions[(node, letter)] = target
            if is_new:
                queue.append(target)

    logger.debug(f"Follower automaton: {len(nodes)} nodes")
    return FollowerAutomaton(nodes, transitions, initial)
