"""
Exact engine for the up/down/equals shift.

The presenting graph has vertex set {0, 1, 2, ...}. Every vertex k has a
U-edge to k + 1. Every vertex k >= 1 has a D-edge to floor(k / 2); vertex 0
instead carries the only E-edge, a self-loop. The graph is infinite, but the
sets of terminal and initial vertices of words are always empty, a half-open
interval [lo, hi) or a ray [lo, inf), so each step is O(1) on a VertexSet.

The shift is nonsofic: it has exactly 2n + 1 follower sets of words of length
n, while its predecessor sets grow at least like 2^floor(n / 4).
"""

import logging
from collections.abc import Iterator
from enum import StrEnum

from src.domain.class_table import ClassTable, Side
from src.domain.exceptions import (
    ClosedFormPreconditionError,
    LengthCapExceededError,
    PreconditionError,
    UnknownLetterError,
    WitnessPreconditionError,
)
from src.domain.language import LanguageOracle
from src.domain.words import Alphabet, Word

logger = logging.getLogger(__name__)

UP = "U"
DOWN = "D"
EQUALS = "E"
UPDOWN_ALPHABET = Alphabet((UP, DOWN, EQUALS))

DEFAULT_LENGTH_CAP = 12


class VertexKind(StrEnum):
    EMPTY = "empty"
    INTERVAL = "interval"
    RAY = "ray"


class VertexSet:
    """
    Symbolic set of vertices: Empty, Interval [lo, hi) or Ray [lo, inf).

    Instances are canonical (Interval requires lo < hi), so structural
    equality is set equality.
    """

    __slots__ = ("_hi", "_kind", "_lo")

    def __init__(self, kind: VertexKind, lo: int = 0, hi: int | None = None):
        """
        Initialize a VertexSet. Prefer the `empty`, `interval` and `ray` constructors.

        Raises:
            PreconditionError: If the bounds are not canonical for the kind
        """
        if kind == VertexKind.EMPTY:
            lo, hi = 0, None
        elif kind == VertexKind.INTERVAL:
            if hi is None or lo < 0 or lo >= hi:
                raise PreconditionError(f"interval [{lo},{hi}) is not canonical")
        else:
            if lo < 0 or hi is not None:
                raise PreconditionError(f"ray [{lo},inf) is not canonical")
        self._kind = kind
        self._lo = lo
        self._hi = hi

    @classmethod
    def empty(cls) -> "VertexSet":
        return cls(VertexKind.EMPTY)

    @classmethod
    def interval(cls, lo: int, hi: int) -> "VertexSet":
        """[lo, hi), or Empty when lo >= hi."""
        lo = max(lo, 0)
        if lo >= hi:
            return cls.empty()
        return cls(VertexKind.INTERVAL, lo, hi)

    @classmethod
    def singleton(cls, k: int) -> "VertexSet":
        return cls(VertexKind.INTERVAL, k, k + 1)

    @classmethod
    def ray(cls, lo: int) -> "VertexSet":
        return cls(VertexKind.RAY, max(lo, 0))

    @property
    def kind(self) -> VertexKind:
        return self._kind

    @property
    def lo(self) -> int:
        return self._lo

    @property
    def hi(self) -> int | None:
        return self._hi

    @property
    def is_empty(self) -> bool:
        return self._kind == VertexKind.EMPTY

    @property
    def is_singleton(self) -> bool:
        return self._kind == VertexKind.INTERVAL and self._hi == self._lo + 1

    def __contains__(self, vertex: object) -> bool:
        if not isinstance(vertex, int) or self.is_empty:
            return False
        if self._kind == VertexKind.RAY:
            return vertex >= self._lo
        assert self._hi is not None
        return self._lo <= vertex < self._hi

    def __bool__(self) -> bool:
        return not self.is_empty

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VertexSet):
            return False
        return (self._kind, self._lo, self._hi) == (other._kind, other._lo, other._hi)

    def __hash__(self) -> int:
        return hash((self._kind, self._lo, self._hi))

    def __str__(self) -> str:
        if self._kind == VertexKind.EMPTY:
            return "empty"
        if self._kind == VertexKind.RAY:
            return f"[{self._lo},inf)"
        return f"[{self._lo},{self._hi})"

    def __repr__(self) -> str:
        return f"VertexSet({self})"


FULL = VertexSet.ray(0)


def _check_letter(letter: str) -> None:
    if letter not in UPDOWN_ALPHABET:
        raise UnknownLetterError(letter)


def ud_forward_step(vertices: VertexSet, letter: str) -> VertexSet:
    """
    Image of a vertex set under one edge labeled `letter`.

    Vertex 0 has no D-edge, so D acts on the vertices >= 1 only.

    Raises:
        UnknownLetterError: If `letter` is not U, D or E
    """
    _check_letter(letter)
    if vertices.is_empty:
        return vertices
    if letter == UP:
        if vertices.kind == VertexKind.RAY:
            return VertexSet.ray(vertices.lo + 1)
        assert vertices.hi is not None
        return VertexSet.interval(vertices.lo + 1, vertices.hi + 1)
    if letter == DOWN:
        lo = max(vertices.lo, 1)
        if vertices.kind == VertexKind.RAY:
            return VertexSet.ray(lo // 2)
        assert vertices.hi is not None
        if lo >= vertices.hi:
            return VertexSet.empty()
        return VertexSet.interval(lo // 2, (vertices.hi - 1) // 2 + 1)
    return VertexSet.singleton(0) if 0 in vertices else VertexSet.empty()


def ud_backward_step(vertices: VertexSet, letter: str) -> VertexSet:
    """
    Preimage of a vertex set under edges labeled `letter`.

    U shifts both endpoints down by one (clamped at 0), D doubles them (the
    preimage never contains 0), E maps any set containing 0 to {0}.

    Raises:
        UnknownLetterError: If `letter` is not U, D or E
    """
    _check_letter(letter)
    if vertices.is_empty:
        return vertices
    if letter == UP:
        if vertices.kind == VertexKind.RAY:
            return VertexSet.ray(vertices.lo - 1)
        assert vertices.hi is not None
        return VertexSet.interval(max(vertices.lo - 1, 0), vertices.hi - 1)
    if letter == DOWN:
        if vertices.kind == VertexKind.RAY:
            return VertexSet.ray(max(2 * vertices.lo, 1))
        assert vertices.hi is not None
        return VertexSet.interval(max(2 * vertices.lo, 1), 2 * vertices.hi)
    return VertexSet.singleton(0) if 0 in vertices else VertexSet.empty()


def ud_run_forward(vertices: VertexSet, word: Word) -> VertexSet:
    """Fold ud_forward_step over a word, stopping early once empty."""
    for letter in word:
        vertices = ud_forward_step(vertices, letter)
        if vertices.is_empty:
            break
    return vertices


def ud_terminal(word: Word) -> VertexSet:
    """Terminal vertices of paths labeled `word`; Empty iff the word is illegal."""
    return ud_run_forward(FULL, word)


def ud_run_backward(word: Word, vertices: VertexSet) -> VertexSet:
    """Fold ud_backward_step over a word from right to left."""
    for letter in reversed(word):
        vertices = ud_backward_step(vertices, letter)
        if vertices.is_empty:
            break
    return vertices


def ud_initial(word: Word) -> VertexSet:
    """Initial vertices of paths labeled `word`; Empty iff the word is illegal."""
    return ud_run_backward(word, FULL)


class UpDownLanguage(LanguageOracle):
    """Language oracle of the up/down/equals shift."""

    name = "updown"

    @property
    def alphabet(self) -> Alphabet:
        return UPDOWN_ALPHABET

    def contains(self, word: Word) -> bool:
        return not ud_terminal(word).is_empty


class ClosedFormParams:
    """
    Parameters of the closed form for initial intervals.

    For a seed [a, b) and a word v over {U, D} without consecutive U, the
    preimage of the seed under v is [2^j a - c, 2^j b - c) where j is the
    number of D symbols and c = sum of 2^n_i over the U symbols, n_i being the
    number of D symbols to the left of the i-th U (U counted from the right).
    """

    def __init__(self, j: int, exponents: tuple[int, ...], a: int, b: int):
        if any(x <= y for x, y in zip(exponents, exponents[1:], strict=False)):
            raise ClosedFormPreconditionError("exponents must be strictly decreasing")
        if exponents and j < exponents[0]:
            raise ClosedFormPreconditionError("j must be at least the largest exponent")
        self.j = j
        self.exponents = exponents
        self.a = a
        self.b = b

    @property
    def offset(self) -> int:
        return sum(2**e for e in self.exponents)

    @property
    def left_endpoint(self) -> int:
        return 2**self.j * self.a - self.offset

    @property
    def right_endpoint(self) -> int:
        return 2**self.j * self.b - self.offset

    def interval(self) -> VertexSet:
        return VertexSet.interval(self.left_endpoint, self.right_endpoint)

    def __repr__(self) -> str:
        return f"ClosedFormParams(j={self.j}, exponents={self.exponents}, a={self.a}, b={self.b})"


def closed_form_params(v: Word, seed: VertexSet) -> ClosedFormParams:
    """
    Compute j and the exponents n_i for a word and a seed interval.

    Raises:
        ClosedFormPreconditionError: If v has letters other than U/D, has
            consecutive U, the seed is not a bounded interval with lo >= 1, or
            the left endpoint would reach 0 before a further D step
    """
    if seed.kind != VertexKind.INTERVAL or seed.hi is None:
        raise ClosedFormPreconditionError("seed must be a bounded interval")
    if seed.lo < 1:
        raise ClosedFormPreconditionError("seed left endpoint must be at least 1")
    for letter in v:
        if letter not in (UP, DOWN):
            raise ClosedFormPreconditionError(f"letter '{letter}' is not U or D")
    for left, right in zip(v, v[1:], strict=False):
        if left == UP and right == UP:
            raise ClosedFormPreconditionError("v contains consecutive U symbols")

    lo = seed.lo
    for letter in reversed(v):
        if letter == DOWN:
            if lo < 1:
                raise ClosedFormPreconditionError("left endpoint reaches 0 before a D step")
            lo *= 2
        else:
            lo -= 1
    if lo < 0:
        raise ClosedFormPreconditionError("computed left endpoint is negative")

    exponents = []
    downs_seen = 0
    for letter in v:
        if letter == DOWN:
            downs_seen += 1
        else:
            exponents.append(downs_seen)
    exponents.reverse()
    return ClosedFormParams(downs_seen, tuple(exponents), seed.lo, seed.hi)


def ud_closed_form(v: Word, seed: VertexSet) -> VertexSet:
    """
    Preimage of a seed interval under v, computed in closed form.

    Equals ud_run_backward(v, seed) whenever the precondition holds.

    Raises:
        ClosedFormPreconditionError: See closed_form_params
    """
    return closed_form_params(v, seed).interval()


def _enumerate(n: int) -> Iterator[tuple[Word, VertexSet]]:
    """Yield (w, ud_terminal(w)) for w in L_n, pruning illegal prefixes."""
    letters = UPDOWN_ALPHABET.letters
    level: list[tuple[tuple[str, ...], VertexSet]] = [((), FULL)]
    for _ in range(n):
        level = [
            (prefix + (letter,), image)
            for prefix, vertices in level
            for letter in letters
            if not (image := ud_forward_step(vertices, letter)).is_empty
        ]
    for letters_of_word, vertices in level:
        yield Word(letters_of_word), vertices


def ud_language(n: int) -> list[Word]:
    """L_n of the shift, in canonical order."""
    return [word for word, _ in _enumerate(n)]


def _check_cap(n: int, cap: int) -> None:
    if n < 1:
        raise PreconditionError("tables need n >= 1")
    if n > cap:
        raise LengthCapExceededError(n, cap)


def ud_follower_table(n: int, cap: int = DEFAULT_LENGTH_CAP) -> ClassTable[VertexSet]:
    """
    Exact follower classes of L_n.

    The class of w is its terminal set; distinct terminal sets have distinct
    follower sets (see ud_separating_word), so the count is exact.

    Raises:
        LengthCapExceededError: If n exceeds `cap`
    """
    _check_cap(n, cap)
    labelled = {word: (vertices, vertices) for word, vertices in _enumerate(n)}
    table = ClassTable.partition(n, Side.FOLLOWER, labelled)
    logger.debug(f"updown follower table n={n}: {len(labelled)} words, {table.count} classes")
    return table


def ud_predecessor_table(n: int, cap: int = DEFAULT_LENGTH_CAP) -> ClassTable[VertexSet]:
    """
    Exact predecessor classes of L_n.

    The class of w is its initial set; k in I(w) but not in I(w') gives
    E U^k w legal and E U^k w' illegal, so the count is exact.

    Raises:
        LengthCapExceededError: If n exceeds `cap`
    """
    _check_cap(n, cap)
    labelled = {}
    for word, _ in _enumerate(n):
        initial = ud_initial(word)
        labelled[word] = (initial, initial)
    table = ClassTable.partition(n, Side.PREDECESSOR, labelled)
    logger.debug(f"updown predecessor table n={n}: {len(labelled)} words, {table.count} classes")
    return table


def _words_without_consecutive_up(length: int) -> list[Word]:
    words: list[tuple[str, ...]] = [()]
    for _ in range(length):
        words = [
            w + (letter,)
            for w in words
            for letter in (DOWN, UP)
            if not (letter == UP and w and w[-1] == UP)
        ]
    return sorted((Word(w) for w in words), key=Word.sort_key)


def witness_suffix(n: int) -> Word:
    """D^(ceil(n/2) - 1) E, the common suffix of the witness set."""
    return Word.repeat(DOWN, (n + 1) // 2 - 1) + (EQUALS,)


def ud_witness_set(n: int) -> list[Word]:
    """
    Words of length n with pairwise distinct predecessor sets.

    Every member is v D^(ceil(n/2) - 1) E with v over {U, D} of length
    floor(n/2) and without consecutive U. There are at least 2^floor(n/4).

    Raises:
        WitnessPreconditionError: If n <= 6
    """
    if n <= 6:
        raise WitnessPreconditionError("the witness set is defined for n > 6")
    suffix = witness_suffix(n)
    return [v + suffix for v in _words_without_consecutive_up(n // 2)]


def _least_power_exponent(k: int) -> int:
    """Least m with 2^m > k."""
    return k.bit_length()


def ud_follower_witness(k: int) -> Word:
    """
    U^(2^m - k - 1) D^m E, where 2^m is the least power of 2 above k.

    Legal after a word ending at vertex k (or at a ray starting at k), illegal
    after one ending only at vertices above k.
    """
    if k < 0:
        raise PreconditionError("k must be nonnegative")
    m = _least_power_exponent(k)
    return Word.repeat(UP, 2**m - k - 1) + Word.repeat(DOWN, m) + (EQUALS,)


def ud_ray_witness(k: int) -> Word:
    """
    D^(m + 1) E, where 2^m is the least power of 2 above k.

    Legal from vertex 2^m, so after the ray [k, inf); illegal from vertex k.
    """
    if k < 0:
        raise PreconditionError("k must be nonnegative")
    m = _least_power_exponent(k)
    return Word.repeat(DOWN, m + 1) + (EQUALS,)


def ud_separating_word(first: VertexSet, second: VertexSet) -> Word:
    """
    A word legal after exactly one of two distinct nonempty terminal sets.

    Both sets must be singletons or rays, the shapes terminal sets take.

    Raises:
        PreconditionError: If the sets are equal, empty or of another shape
    """
    for vertices in (first, second):
        if not (vertices.is_singleton or vertices.kind == VertexKind.RAY):
            raise PreconditionError(f"{vertices} is not a terminal-set shape")
    if first == second:
        raise PreconditionError("sets are equal")
    if first.lo != second.lo:
        return ud_follower_witness(min(first.lo, second.lo))
    return ud_ray_witness(first.lo)


def ud_predecessor_witness(k: int) -> Word:
    """E U^k: the left context that ends exactly at vertex k."""
    if k < 0:
        raise PreconditionError("k must be nonnegative")
    return Word((EQUALS,)) + Word.repeat(UP, k)
