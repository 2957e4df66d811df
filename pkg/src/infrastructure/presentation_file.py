"""
Graph file codec.

A presentation file is UTF-8 text with one record per line:

    alphabet: 0 1
    states: q0 q1
    edge: q0 0 q0
    edge: q0 1 q1
    edge: q1 0 q0

`#` starts a comment and blank lines are ignored. Serialization writes the
canonical form (sorted letters, states and edges, no comments), which parses
back to an equal graph and re-serializes to identical bytes.
"""

import logging
from pathlib import Path

from src.domain.exceptions import InvalidAlphabetError, PresentationParseError
from src.domain.graph import Edge, LabeledGraph
from src.domain.words import Alphabet

logger = logging.getLogger(__name__)

ALPHABET_KEY = "alphabet"
STATES_KEY = "states"
EDGE_KEY = "edge"


def _records(text: str) -> list[tuple[int, str, list[str]]]:
    """Split text into (line number, key, fields), dropping comments and blank lines."""
    records = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, colon, rest = line.partition(":")
        if not colon:
            raise PresentationParseError(line_number, f"expected 'key: values', got '{line}'")
        records.append((line_number, key.strip(), rest.split()))
    return records


def parse_presentation(text: str) -> LabeledGraph:
    """
    Parse a presentation file.

    Args:
        text: File content

    Returns:
        The LabeledGraph exactly as listed, in canonical order

    Raises:
        PresentationParseError: On a malformed or misplaced line
        PresentationValidationError: On unknown states, duplicate edges or
            foreign labels
    """
    records = _records(text)
    expected = (ALPHABET_KEY, STATES_KEY)
    for position, key in enumerate(expected):
        if len(records) <= position:
            last_line = records[-1][0] + 1 if records else 1
            raise PresentationParseError(last_line, f"missing '{key}:' record")
        line_number, found, _ = records[position]
        if found != key:
            raise PresentationParseError(line_number, f"expected '{key}:' record, got '{found}:'")

    alphabet_line, _, letters = records[0]
    try:
        alphabet = Alphabet(letters)
    except InvalidAlphabetError as e:
        raise PresentationParseError(alphabet_line, e.reason) from e

    states_line, _, states = records[1]
    if not states:
        raise PresentationParseError(states_line, "at least one state is required")

    edges: list[Edge] = []
    for line_number, key, fields in records[2:]:
        if key != EDGE_KEY:
            raise PresentationParseError(line_number, f"unexpected '{key}:' record")
        if len(fields) != 3:
            raise PresentationParseError(line_number, "edge needs 'source label target'")
        source, label, target = fields
        edges.append((source, label, target))

    graph = LabeledGraph(alphabet, states, edges)
    logger.debug(f"Parsed presentation: {graph!r}")
    return graph


def serialize_presentation(graph: LabeledGraph) -> str:
    """Canonical file content for a graph."""
    lines = [
        f"{ALPHABET_KEY}: {' '.join(graph.alphabet.letters)}",
        f"{STATES_KEY}: {' '.join(graph.states)}",
    ]
    lines.extend(f"{EDGE_KEY}: {source} {label} {target}" for source, label, target in graph.edges)
    return "\n".join(lines) + "\n"


def load_presentation(path: str | Path) -> LabeledGraph:
    """
    Read and parse a presentation file.

    Raises:
        PresentationParseError: If the file cannot be read or parsed
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise PresentationParseError(0, f"cannot read {path}: {e.strerror}") from e
    return parse_presentation(text)
