"""
Unit tests for coded systems and S-gap shifts.
"""

import pytest

from src.domain.class_table import Side
from src.domain.coded import (
    CodedSystem,
    SGapSpec,
    coded_from_sofic,
    last_separator_partition,
    normalize_after_separator,
    sgap_system,
)
from src.domain.exceptions import (
    CutoffExceededError,
    InvalidSGapSpecError,
    PreconditionError,
    SeparatorCollisionError,
    UnknownLetterError,
)
from src.domain.graph import LabeledGraph
from src.domain.language import GraphLanguage, enumerate_language
from src.domain.oracle import classify, language_axiom_violations, profile
from src.domain.words import Word


def w(text: str) -> Word:
    return Word.parse(text)


def assert_tail_determines_followers(
    system: CodedSystem, base: GraphLanguage, max_u: int, max_v: int, depth: int
) -> None:
    """Check profile(u c v) == profile(c v) for c-free v of L(X) and every legal u."""
    separator = system.separator
    for v_length in range(max_v + 1):
        for v in enumerate_language(base, v_length):
            tail = Word((separator,)) + v
            expected = profile(system, tail, Side.FOLLOWER, depth)
            for u_length in range(max_u + 1):
                for u in enumerate_language(system, u_length):
                    if system.contains(u + tail):
                        assert profile(system, u + tail, Side.FOLLOWER, depth) == expected


@pytest.fixture
def gaps_one_two() -> CodedSystem:
    return sgap_system(SGapSpec.from_gaps([1, 2]))


@pytest.fixture
def powers_of_two() -> CodedSystem:
    return sgap_system(SGapSpec.from_rule("powers-of-2", 64))


@pytest.fixture
def golden_coded(golden_mean: LabeledGraph) -> CodedSystem:
    return coded_from_sofic(golden_mean, "2")


class TestCodedFromSofic:
    """Test coded systems whose code is the language of a graph."""

    def test_alphabet_gains_separator(self, golden_coded: CodedSystem) -> None:
        assert golden_coded.alphabet.letters == ("0", "1", "2")
        assert golden_coded.name == "coded(2)"

    def test_code_predicates(self, golden_coded: CodedSystem) -> None:
        assert golden_coded.is_in_W(w("01"))
        assert not golden_coded.is_in_W(w("11"))
        assert golden_coded.is_in_W(Word())

    def test_membership_across_separators(self, golden_coded: CodedSystem) -> None:
        """Test that 11 may straddle a separator but not a segment."""
        assert golden_coded.contains(w("1210"))
        assert golden_coded.contains(w("22"))
        assert not golden_coded.contains(w("0112"))

    def test_foreign_letter(self, golden_coded: CodedSystem) -> None:
        with pytest.raises(UnknownLetterError):
            golden_coded.contains(w("013"))

    def test_separator_collision(self, golden_mean: LabeledGraph) -> None:
        with pytest.raises(SeparatorCollisionError) as exc_info:
            coded_from_sofic(golden_mean, "0")

        assert exc_info.value.separator == "0"

    def test_even_shift_suffix(self, even_shift: LabeledGraph) -> None:
        assert coded_from_sofic(even_shift, "c").is_W_suffix(w("10"))

    def test_base_language_is_embedded(
        self, golden_coded: CodedSystem, golden_mean_language: GraphLanguage
    ) -> None:
        """Test that separator-free words of the coded system are the base words."""
        for n in range(1, 9):
            cfree = [word for word in enumerate_language(golden_coded, n) if "2" not in word]
            assert cfree == enumerate_language(golden_mean_language, n)

    def test_segments(self, golden_coded: CodedSystem) -> None:
        assert golden_coded.segments(w("02102")) == [w("0"), w("10"), Word()]


class TestSGapSpec:
    """Test S-gap specifications."""

    def test_explicit_gaps(self) -> None:
        spec = SGapSpec.from_gaps([2, 1])

        assert spec.gaps() == [1, 2]
        assert spec.bounded
        assert spec.description == "S={1,2}"

    @pytest.mark.parametrize("gaps", [[], [-1, 2]])
    def test_invalid_explicit_gaps(self, gaps: list[int]) -> None:
        with pytest.raises(InvalidSGapSpecError):
            SGapSpec.from_gaps(gaps)

    def test_unknown_rule(self) -> None:
        with pytest.raises(InvalidSGapSpecError):
            SGapSpec.from_rule("primes", 10)

    def test_rule_without_gap_below_cutoff(self) -> None:
        with pytest.raises(InvalidSGapSpecError):
            SGapSpec.from_rule("powers-of-2", 0)

    def test_negative_cutoff(self) -> None:
        with pytest.raises(InvalidSGapSpecError):
            SGapSpec.from_rule("even", -1)

    def test_even_rule_gaps(self) -> None:
        assert SGapSpec.from_rule("even", 10).gaps() == [0, 2, 4, 6, 8, 10]

    def test_has_gap_at_least(self) -> None:
        """Test that unbounded rules refuse to answer beyond the cutoff."""
        bounded = SGapSpec.from_gaps([1, 2])
        unbounded = SGapSpec.from_rule("powers-of-2", 64)

        assert bounded.has_gap_at_least(2)
        assert not bounded.has_gap_at_least(3)
        assert unbounded.has_gap_at_least(33)
        with pytest.raises(CutoffExceededError):
            unbounded.has_gap_at_least(65)


class TestSGapSystem:
    """Test membership in S-gap shifts."""

    def test_name(self, gaps_one_two: CodedSystem) -> None:
        assert gaps_one_two.name == "sgap(S={1,2})"

    def test_code_words(self, gaps_one_two: CodedSystem) -> None:
        assert gaps_one_two.is_in_W(w("0"))
        assert not gaps_one_two.is_in_W(w("000"))
        assert not gaps_one_two.is_in_W(w("1"))

    def test_membership(self, gaps_one_two: CodedSystem) -> None:
        assert gaps_one_two.contains(w("010010"))
        assert not gaps_one_two.contains(w("0110"))
        assert not gaps_one_two.contains(w("0001"))

    def test_zero_gap(self) -> None:
        """Test that 11 is legal exactly when 0 is an allowed gap."""
        assert not sgap_system(SGapSpec.from_gaps([2])).contains(w("11"))
        assert sgap_system(SGapSpec.from_gaps([0, 2])).contains(w("11"))

    def test_bounded_prefix(self, gaps_one_two: CodedSystem) -> None:
        assert not gaps_one_two.is_W_prefix(w("000"))

    def test_powers_of_two_within_cutoff(self, powers_of_two: CodedSystem) -> None:
        assert powers_of_two.is_W_suffix(w("00000"))
        assert powers_of_two.is_in_W(Word.repeat("0", 64))
        assert not powers_of_two.is_in_W(Word.repeat("0", 63))

    def test_powers_of_two_beyond_cutoff(self, powers_of_two: CodedSystem) -> None:
        with pytest.raises(CutoffExceededError):
            powers_of_two.is_in_W(Word.repeat("0", 65))
        with pytest.raises(CutoffExceededError):
            powers_of_two.is_W_prefix(Word.repeat("0", 70))
        with pytest.raises(CutoffExceededError):
            powers_of_two.contains(w("1") + Word.repeat("0", 65) + ("1",))


class TestNormalization:
    """Test cutting words back to their last separator."""

    def test_cut_at_last_separator(self) -> None:
        assert normalize_after_separator(w("0010100"), "1") == w("100")
        assert normalize_after_separator(w("10"), "1") == w("10")

    def test_no_separator(self) -> None:
        with pytest.raises(PreconditionError):
            normalize_after_separator(w("00"), "1")

    def test_profiles_agree_after_normalization(self, gaps_one_two: CodedSystem) -> None:
        assert profile(gaps_one_two, w("0010"), Side.FOLLOWER, 3) == profile(
            gaps_one_two, w("10"), Side.FOLLOWER, 3
        )

    @pytest.mark.parametrize("n", range(1, 6))
    def test_follower_profiles_depend_on_the_tail(self, gaps_one_two: CodedSystem, n: int) -> None:
        for word in enumerate_language(gaps_one_two, n):
            if "1" not in word:
                continue
            tail = normalize_after_separator(word, "1")
            for depth in (1, 2, 3):
                assert profile(gaps_one_two, word, Side.FOLLOWER, depth) == profile(
                    gaps_one_two, tail, Side.FOLLOWER, depth
                )

    def test_golden_mean_code_tail_determines_followers(
        self, golden_coded: CodedSystem, golden_mean_language: GraphLanguage
    ) -> None:
        assert_tail_determines_followers(golden_coded, golden_mean_language, 2, 2, 3)

    @pytest.mark.slow
    def test_golden_mean_code_tail_determines_followers_at_depth_four(
        self, golden_coded: CodedSystem, golden_mean_language: GraphLanguage
    ) -> None:
        """Test u c v against c v for |u|, |v| <= 4; shallower depths follow by truncation."""
        assert_tail_determines_followers(golden_coded, golden_mean_language, 4, 4, 4)


class TestFollowerCountTrends:
    """Test depth-limited follower counts of S-gap shifts as n grows."""

    @pytest.mark.parametrize("depth", [1, 2, 3])
    def test_finite_gap_set_counts_stabilize(self, gaps_one_two: CodedSystem, depth: int) -> None:
        """Test that the zero run after the last 1 (0, 1 or 2) is all that matters."""
        counts = [classify(gaps_one_two, n, Side.FOLLOWER, depth).count for n in range(1, 7)]

        assert counts == [2, 3, 3, 3, 3, 3]

    def test_powers_of_two_counts_grow(self, powers_of_two: CodedSystem) -> None:
        """Test one new class per length: each zero run after the last 1, plus the all-zero word."""
        counts = [classify(powers_of_two, n, Side.FOLLOWER, 8).count for n in range(1, 7)]

        assert counts == [2, 3, 4, 5, 6, 7]


class TestLastSeparatorPartition:
    """Test the partition of L_n by the position of the last separator."""

    def test_all_keys_present(self, gaps_one_two: CodedSystem) -> None:
        parts = last_separator_partition(gaps_one_two, 3)

        assert sorted(parts) == [0, 1, 2, 3]
        assert parts[0] == []

    @pytest.mark.parametrize("n", range(1, 6))
    def test_partition_covers_the_language(self, gaps_one_two: CodedSystem, n: int) -> None:
        parts = last_separator_partition(gaps_one_two, n)

        flat = sorted((word for words in parts.values() for word in words), key=Word.sort_key)
        assert flat == enumerate_language(gaps_one_two, n)
        for k, words in parts.items():
            for word in words:
                if k == 0:
                    assert "1" not in word
                else:
                    assert word[n - k] == "1"
                    assert "1" not in word[n - k + 1 :]


class TestLanguageAxioms:
    """Test that coded languages are factorial and biextendable."""

    def test_gaps_one_two(self, gaps_one_two: CodedSystem) -> None:
        assert language_axiom_violations(gaps_one_two, 8) == []

    def test_powers_of_two(self, powers_of_two: CodedSystem) -> None:
        assert language_axiom_violations(powers_of_two, 8) == []

    def test_coded_golden_mean(self, golden_coded: CodedSystem) -> None:
        assert language_axiom_violations(golden_coded, 6) == []
