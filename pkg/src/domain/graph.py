"""
Labeled-graph presentations of sofic shifts.

A LabeledGraph is a finite directed multigraph whose edges carry alphabet
letters. The shift it presents is the set of labels of bi-infinite paths, so
only essential graphs (every state has an incoming and an outgoing edge) have
finite-path languages that determine follower sets.

Decision: Structural algorithms (essentialization, reversal) run on a
networkx MultiDiGraph, the usual representation for labeled graphs in
symbolic-dynamics code. The LabeledGraph itself stays an immutable value with a
precomputed successor map for the hot transition path.
"""

import logging
from collections import defaultdict
from collections.abc import Iterable

import networkx as nx

from src.domain.exceptions import EmptySubshiftError, PresentationValidationError
from src.domain.words import Alphabet

logger = logging.getLogger(__name__)

Edge = tuple[str, str, str]


class StateSet(frozenset[str]):
    """Immutable set of graph states; iteration and display use canonical order."""

    __slots__ = ()

    @property
    def members(self) -> tuple[str, ...]:
        return tuple(sorted(self))

    def __str__(self) -> str:
        return "{" + ",".join(self.members) + "}"

    def __repr__(self) -> str:
        return f"StateSet({self})"


class LabeledGraph:
    """
    Finite labeled graph over an alphabet.

    States and edges are stored in canonical order, so two graphs built from
    the same records in any order are equal.
    """

    def __init__(self, alphabet: Alphabet, states: Iterable[str], edges: Iterable[Edge]):
        """
        Initialize a LabeledGraph.

        Args:
            alphabet: Alphabet of edge labels
            states: State identifiers
            edges: (source, label, target) triples

        Raises:
            PresentationValidationError: On duplicate states or edges, unknown
                states, or labels outside the alphabet
        """
        state_list = list(states)
        if len(set(state_list)) != len(state_list):
            raise PresentationValidationError("duplicate state")
        known = set(state_list)

        edge_list = list(edges)
        if len(set(edge_list)) != len(edge_list):
            duplicate = next(e for e in edge_list if edge_list.count(e) > 1)
            raise PresentationValidationError(f"duplicate edge {' '.join(duplicate)}")
        for source, label, target in edge_list:
            for state in (source, target):
                if state not in known:
                    raise PresentationValidationError(f"edge references unknown state '{state}'")
            if label not in alphabet:
                raise PresentationValidationError(f"edge label '{label}' is not in the alphabet")

        self._alphabet = alphabet
        self._states = tuple(sorted(state_list))
        self._edges = tuple(sorted(edge_list))

        successors: dict[tuple[str, str], list[str]] = defaultdict(list)
        for source, label, target in self._edges:
            successors[(source, label)].append(target)
        self._successors = {key: tuple(targets) for key, targets in successors.items()}

    @property
    def alphabet(self) -> Alphabet:
        return self._alphabet

    @property
    def states(self) -> tuple[str, ...]:
        return self._states

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def full_state_set(self) -> StateSet:
        """The set of all states, i.e. the image of the empty word."""
        return StateSet(self._states)

    def successors(self, state: str, letter: str) -> tuple[str, ...]:
        """Targets of the edges leaving `state` with label `letter`."""
        return self._successors.get((state, letter), ())

    def image(self, states: frozenset[str], letter: str) -> StateSet:
        """States reachable from `states` by one edge labeled `letter`."""
        return StateSet(
            target for state in states for target in self._successors.get((state, letter), ())
        )

    def is_essential(self) -> bool:
        """True iff every state has at least one incoming and one outgoing edge."""
        sources = {source for source, _, _ in self._edges}
        targets = {target for _, _, target in self._edges}
        return all(state in sources and state in targets for state in self._states)

    def is_right_resolving(self) -> bool:
        """True iff no state has two outgoing edges with the same label."""
        return all(len(targets) == 1 for targets in self._successors.values())

    def reversed(self) -> "LabeledGraph":
        """Return the graph with every edge reversed (used for predecessor sets)."""
        return LabeledGraph.from_networkx(self.to_networkx().reverse(copy=True), self._alphabet)

    def to_networkx(self) -> nx.MultiDiGraph:
        """Return a networkx MultiDiGraph with a `label` attribute on every edge."""
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(self._states)
        for source, label, target in self._edges:
            graph.add_edge(source, target, label=label)
        return graph

    @classmethod
    def from_networkx(cls, graph: nx.MultiDiGraph, alphabet: Alphabet) -> "LabeledGraph":
        """Build a LabeledGraph from a MultiDiGraph whose edges carry `label`."""
        edges = [(source, label, target) for source, target, label in graph.edges(data="label")]
        return cls(alphabet, list(graph.nodes), edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LabeledGraph):
            return False
        return (
            self._alphabet == other._alphabet
            and self._states == other._states
            and self._edges == other._edges
        )

    def __hash__(self) -> int:
        return hash((self._alphabet, self._states, self._edges))

    def __repr__(self) -> str:
        return f"LabeledGraph(states={len(self._states)}, edges={len(self._edges)})"


def essentialize(graph: LabeledGraph) -> LabeledGraph:
    """
    Return the maximal essential subgraph.

    Stranded states (no outgoing or no incoming edge) are removed repeatedly,
    together with their edges, until none is left. The operation is idempotent.

    Args:
        graph: Any labeled graph

    Returns:
        The essential part of the graph, over the same alphabet

    Raises:
        EmptySubshiftError: If no state survives
    """
    nx_graph = graph.to_networkx()

    stranded = [q for q in nx_graph if nx_graph.out_degree(q) == 0 or nx_graph.in_degree(q) == 0]
    while stranded:
        frontier = {p for q in stranded for p, _ in nx_graph.in_edges(q)}
        frontier |= {r for q in stranded for _, r in nx_graph.out_edges(q)}
        nx_graph.remove_nodes_from(stranded)
        stranded = [
            q
            for q in frontier
            if q in nx_graph and (nx_graph.out_degree(q) == 0 or nx_graph.in_degree(q) == 0)
        ]

    if nx_graph.number_of_nodes() == 0:
        raise EmptySubshiftError()

    removed = len(graph.states) - nx_graph.number_of_nodes()
    if removed:
        logger.debug(f"Essentialization removed {removed} stranded state(s)")
    return LabeledGraph.from_networkx(nx_graph, graph.alphabet)
