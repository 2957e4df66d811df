"""
Alphabet and Word value objects.

Letters are short printable tokens rather than single characters, so a coded
system can always pick a fresh separator letter. Words are immutable tuples of
tokens; the empty word is a regular value.
"""

from collections.abc import Iterable, Iterator
from typing import SupportsIndex, overload

from src.domain.exceptions import InvalidAlphabetError, UnknownLetterError

EMPTY_WORD_DISPLAY = "ε"


def _is_valid_token(token: str) -> bool:
    return bool(token) and token.isprintable() and not any(c.isspace() for c in token) and "#" not in token


class Alphabet:
    """
    Finite, canonically ordered set of letter tokens.

    The canonical order is lexicographic on tokens and is the only order used
    for sorting words, states and reports.
    """

    def __init__(self, letters: Iterable[str]):
        """
        Initialize an Alphabet.

        Args:
            letters: Letter tokens, in any order

        Raises:
            InvalidAlphabetError: If empty, duplicated or containing an invalid token
        """
        tokens = list(letters)
        if not tokens:
            raise InvalidAlphabetError("an alphabet needs at least one letter")
        if len(set(tokens)) != len(tokens):
            raise InvalidAlphabetError("duplicate letters")
        for token in tokens:
            if not _is_valid_token(token):
                raise InvalidAlphabetError(f"'{token}' is not a printable token")
        self._letters = tuple(sorted(tokens))

    @property
    def letters(self) -> tuple[str, ...]:
        """Letters in canonical order."""
        return self._letters

    def with_letter(self, letter: str) -> "Alphabet":
        """Return the alphabet extended by one letter."""
        return Alphabet((*self._letters, letter))

    def check_word(self, word: "Word") -> None:
        """
        Ensure every letter of a word belongs to this alphabet.

        Raises:
            UnknownLetterError: On the first foreign letter
        """
        for letter in word:
            if letter not in self:
                raise UnknownLetterError(letter)

    def __contains__(self, letter: object) -> bool:
        return letter in self._letters

    def __iter__(self) -> Iterator[str]:
        return iter(self._letters)

    def __len__(self) -> int:
        return len(self._letters)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Alphabet):
            return False
        return self._letters == other._letters

    def __hash__(self) -> int:
        return hash(self._letters)

    def __repr__(self) -> str:
        return f"Alphabet({list(self._letters)!r})"


class Word(tuple[str, ...]):
    """
    Finite sequence of letter tokens.

    Slicing and concatenation return Words, so prefix/suffix decompositions
    stay in the type. Equality and hashing are those of the underlying tuple.
    """

    __slots__ = ()

    def __new__(cls, letters: Iterable[str] = ()) -> "Word":
        return super().__new__(cls, letters)

    @classmethod
    def parse(cls, text: str) -> "Word":
        """
        Parse a word from text.

        Whitespace-separated tokens are used when the text contains whitespace,
        otherwise every character is a letter. The empty string is the empty word.
        """
        stripped = text.strip()
        if not stripped:
            return cls()
        if any(c.isspace() for c in stripped):
            return cls(stripped.split())
        return cls(stripped)

    @classmethod
    def repeat(cls, letter: str, times: int) -> "Word":
        """Return the word made of `times` copies of `letter`."""
        return cls((letter,) * times)

    @property
    def letters(self) -> tuple[str, ...]:
        return tuple(self)

    @property
    def length(self) -> int:
        return len(self)

    def sort_key(self) -> tuple[int, tuple[str, ...]]:
        """Canonical order: shorter words first, then lexicographic by token."""
        return (len(self), tuple(self))

    def prefixes(self) -> list["Word"]:
        """All prefixes, from the empty word up to the word itself."""
        return [self[:i] for i in range(len(self) + 1)]

    def suffixes(self) -> list["Word"]:
        """All suffixes, from the word itself down to the empty word."""
        return [self[i:] for i in range(len(self) + 1)]

    def display(self) -> str:
        """Printable form used in reports; the empty word is shown as ε."""
        return str(self) or EMPTY_WORD_DISPLAY

    @overload
    def __getitem__(self, index: SupportsIndex) -> str: ...

    @overload
    def __getitem__(self, index: slice) -> "Word": ...

    def __getitem__(self, index: SupportsIndex | slice) -> "str | Word":
        result = super().__getitem__(index)
        if isinstance(index, slice):
            return Word(result)
        return result

    def __add__(self, other: tuple[str, ...]) -> "Word":  # type: ignore[override]
        return Word(tuple.__add__(self, tuple(other)))

    def __str__(self) -> str:
        if all(len(letter) == 1 for letter in self):
            return "".join(self)
        return " ".join(self)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"
