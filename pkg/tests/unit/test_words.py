"""
Unit tests for Alphabet and Word value objects.
"""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.domain.exceptions import InvalidAlphabetError, UnknownLetterError
from src.domain.words import EMPTY_WORD_DISPLAY, Alphabet, Word

words = st.lists(st.sampled_from(["0", "1", "2"]), max_size=8).map(Word)


class TestAlphabet:
    """Test alphabet validation and ordering."""

    def test_letters_are_sorted_canonically(self) -> None:
        """Test that letters are kept in lexicographic token order."""
        assert Alphabet(["U", "D", "E"]).letters == ("D", "E", "U")

    def test_empty_alphabet_is_rejected(self) -> None:
        """Test that an alphabet needs at least one letter."""
        with pytest.raises(InvalidAlphabetError):
            Alphabet([])

    def test_duplicate_letters_are_rejected(self) -> None:
        """Test that duplicated tokens raise InvalidAlphabetError."""
        with pytest.raises(InvalidAlphabetError):
            Alphabet(["0", "1", "0"])

    @pytest.mark.parametrize("token", ["", "a b", "#", "x#", "\t"])
    def test_invalid_tokens_are_rejected(self, token: str) -> None:
        """Test that blank, whitespace and comment tokens are rejected."""
        with pytest.raises(InvalidAlphabetError):
            Alphabet(["0", token])

    def test_multi_character_tokens_are_allowed(self) -> None:
        """Test that letters may be longer than one character."""
        alphabet = Alphabet(["sep", "a"])

        assert "sep" in alphabet
        assert len(alphabet) == 2

    def test_with_letter_extends_alphabet(self, binary: Alphabet) -> None:
        """Test adding a separator letter."""
        assert binary.with_letter("2").letters == ("0", "1", "2")

    def test_check_word_reports_foreign_letter(self, binary: Alphabet) -> None:
        """Test that check_word names the first unknown letter."""
        with pytest.raises(UnknownLetterError) as exc_info:
            binary.check_word(Word.parse("0120"))

        assert exc_info.value.letter == "2"

    def test_equal_alphabets_hash_equal(self) -> None:
        """Test that alphabets built in different orders are equal."""
        assert Alphabet(["1", "0"]) == Alphabet(["0", "1"])
        assert hash(Alphabet(["1", "0"])) == hash(Alphabet(["0", "1"]))


class TestWord:
    """Test word parsing, slicing and ordering."""

    def test_parse_single_character_letters(self) -> None:
        """Test that text without whitespace is read character by character."""
        assert Word.parse("0101") == Word(("0", "1", "0", "1"))

    def test_parse_whitespace_separated_tokens(self) -> None:
        """Test that whitespace-separated text is read token by token."""
        assert Word.parse("10 11 2").letters == ("10", "11", "2")

    def test_empty_word(self) -> None:
        """Test that the empty string parses to the empty word."""
        empty = Word.parse("")

        assert empty == Word()
        assert empty.length == 0
        assert empty.display() == EMPTY_WORD_DISPLAY

    def test_slices_and_concatenation_stay_words(self) -> None:
        """Test that slicing and + return Word instances."""
        word = Word.parse("UDE")

        assert isinstance(word[1:], Word)
        assert isinstance(word + ("U",), Word)
        assert word[0] == "U"

    def test_repeat(self) -> None:
        """Test building a power of a letter."""
        assert str(Word.repeat("D", 3)) == "DDD"
        assert Word.repeat("D", 0) == Word()

    def test_str_uses_spaces_for_long_tokens(self) -> None:
        """Test that multi-character tokens are space separated when printed."""
        assert str(Word(["10", "2"])) == "10 2"
        assert str(Word(["1", "0"])) == "10"

    def test_canonical_order_is_shortlex(self) -> None:
        """Test that shorter words sort first, then lexicographically."""
        unsorted = [Word.parse("10"), Word.parse("1"), Word(), Word.parse("0"), Word.parse("01")]

        ordered = sorted(unsorted, key=Word.sort_key)

        assert [w.display() for w in ordered] == [EMPTY_WORD_DISPLAY, "0", "1", "01", "10"]

    def test_prefixes_and_suffixes(self) -> None:
        """Test prefix and suffix listings include both ends."""
        word = Word.parse("abc")

        assert [str(p) for p in word.prefixes()] == ["", "a", "ab", "abc"]
        assert [str(s) for s in word.suffixes()] == ["abc", "bc", "c", ""]


class TestWordProperties:
    """Algebraic properties of concatenation."""

    @given(words, words, words)
    def test_concatenation_is_associative(self, u: Word, v: Word, w: Word) -> None:
        assert (u + v) + w == u + (v + w)

    @given(words)
    def test_empty_word_is_identity(self, u: Word) -> None:
        assert u + Word() == u
        assert Word() + u == u

    @given(words, st.integers(min_value=0, max_value=8))
    def test_prefix_suffix_decomposition(self, u: Word, i: int) -> None:
        cut = min(i, len(u))
        assert u[:cut] + u[cut:] == u
        assert u[:cut] in u.prefixes()
        assert u[cut:] in u.suffixes()
