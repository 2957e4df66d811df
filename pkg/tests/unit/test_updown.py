"""
Unit tests for the up/down/equals shift engine.

Brute-force checks compare the symbolic VertexSet steps with the vertex-level
edge relation of the presenting graph.
"""

from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.domain.exceptions import (
    ClosedFormPreconditionError,
    LengthCapExceededError,
    PreconditionError,
    UnknownLetterError,
    WitnessPreconditionError,
)
from src.domain.updown import (
    FULL,
    UpDownLanguage,
    VertexKind,
    VertexSet,
    closed_form_params,
    ud_backward_step,
    ud_closed_form,
    ud_follower_table,
    ud_follower_witness,
    ud_forward_step,
    ud_initial,
    ud_language,
    ud_predecessor_table,
    ud_predecessor_witness,
    ud_ray_witness,
    ud_run_backward,
    ud_run_forward,
    ud_separating_word,
    ud_terminal,
    ud_witness_set,
    witness_suffix,
)
from src.domain.words import Word

LETTERS = ("D", "E", "U")


def successor(vertex: int, letter: str) -> int | None:
    """Target of the `letter`-edge leaving `vertex`, if there is one."""
    if letter == "U":
        return vertex + 1
    if letter == "D":
        return vertex // 2 if vertex >= 1 else None
    return 0 if vertex == 0 else None


def members(vertices: VertexSet) -> set[int]:
    """Vertices of a bounded set."""
    if vertices.is_empty:
        return set()
    assert vertices.hi is not None
    return set(range(vertices.lo, vertices.hi))


def w(text: str) -> Word:
    return Word.parse(text)


class TestVertexSet:
    """Test the symbolic vertex-set representation."""

    def test_rendering(self) -> None:
        assert str(VertexSet.interval(4, 8)) == "[4,8)"
        assert str(VertexSet.ray(3)) == "[3,inf)"
        assert str(VertexSet.empty()) == "empty"

    def test_degenerate_interval_is_empty(self) -> None:
        assert VertexSet.interval(5, 5) == VertexSet.empty()
        assert not VertexSet.interval(5, 2)

    def test_interval_is_clamped_at_zero(self) -> None:
        assert VertexSet.interval(-2, 3) == VertexSet.interval(0, 3)

    def test_non_canonical_construction_is_rejected(self) -> None:
        with pytest.raises(PreconditionError):
            VertexSet(VertexKind.INTERVAL, 3, 3)
        with pytest.raises(PreconditionError):
            VertexSet(VertexKind.RAY, 1, 5)

    def test_membership(self) -> None:
        assert 4 in VertexSet.interval(4, 8)
        assert 8 not in VertexSet.interval(4, 8)
        assert 100 in VertexSet.ray(3)
        assert 0 not in VertexSet.empty()

    def test_singleton(self) -> None:
        assert VertexSet.singleton(2).is_singleton
        assert not VertexSet.interval(2, 4).is_singleton
        assert not VertexSet.ray(2).is_singleton


class TestSteps:
    """Test forward and backward steps."""

    @pytest.mark.parametrize(
        "start, letter, expected",
        [
            (VertexSet.singleton(17), "D", VertexSet.singleton(8)),
            (VertexSet.interval(0, 3), "D", VertexSet.interval(0, 2)),
            (VertexSet.singleton(0), "D", VertexSet.empty()),
            (FULL, "D", FULL),
            (FULL, "U", VertexSet.ray(1)),
            (FULL, "E", VertexSet.singleton(0)),
            (VertexSet.ray(1), "E", VertexSet.empty()),
            (VertexSet.interval(2, 5), "U", VertexSet.interval(3, 6)),
        ],
    )
    def test_forward(self, start: VertexSet, letter: str, expected: VertexSet) -> None:
        assert ud_forward_step(start, letter) == expected

    @pytest.mark.parametrize(
        "start, letter, expected",
        [
            (VertexSet.interval(4, 8), "D", VertexSet.interval(8, 16)),
            (VertexSet.singleton(0), "D", VertexSet.interval(1, 2)),
            (VertexSet.singleton(0), "U", VertexSet.empty()),
            (FULL, "U", FULL),
            (FULL, "D", VertexSet.ray(1)),
            (VertexSet.singleton(0), "E", VertexSet.singleton(0)),
            (VertexSet.interval(1, 4), "E", VertexSet.empty()),
        ],
    )
    def test_backward(self, start: VertexSet, letter: str, expected: VertexSet) -> None:
        assert ud_backward_step(start, letter) == expected

    def test_unknown_letter(self) -> None:
        with pytest.raises(UnknownLetterError):
            ud_forward_step(FULL, "X")
        with pytest.raises(UnknownLetterError):
            ud_backward_step(FULL, "X")

    @given(
        st.integers(min_value=0, max_value=40),
        st.integers(min_value=1, max_value=40),
        st.sampled_from(LETTERS),
    )
    def test_forward_matches_vertex_image(self, lo: int, width: int, letter: str) -> None:
        start = VertexSet.interval(lo, lo + width)
        image = {successor(v, letter) for v in members(start)} - {None}

        assert members(ud_forward_step(start, letter)) == image

    @given(
        st.integers(min_value=0, max_value=40),
        st.integers(min_value=1, max_value=40),
        st.sampled_from(LETTERS),
    )
    def test_backward_matches_vertex_preimage(self, lo: int, width: int, letter: str) -> None:
        target = VertexSet.interval(lo, lo + width)
        preimage = {u for u in range(2 * (lo + width) + 2) if successor(u, letter) in target}

        assert members(ud_backward_step(target, letter)) == preimage


class TestTerminalAndInitialSets:
    """Test folds over whole words."""

    def test_illegal_word(self) -> None:
        assert ud_terminal(w("EUUDDD")).is_empty
        assert ud_initial(w("EUUDDD")).is_empty
        assert not UpDownLanguage().contains(w("EUUDDD"))

    def test_single_letters(self) -> None:
        assert ud_terminal(w("D")) == FULL
        assert ud_terminal(w("U")) == VertexSet.ray(1)
        assert ud_terminal(w("E")) == VertexSet.singleton(0)

    def test_initial_sets(self) -> None:
        assert ud_initial(w("DDDE")) == VertexSet.interval(4, 8)
        assert ud_initial(w("UDUDDDDE")) == VertexSet.interval(13, 29)

    def test_run_forward_stops_when_empty(self) -> None:
        assert ud_run_forward(VertexSet.singleton(0), w("DUUU")).is_empty

    @pytest.mark.parametrize("n", range(0, 8))
    def test_terminal_and_initial_agree_on_legality(self, n: int) -> None:
        """Test that a word is legal forwards iff it is legal backwards."""
        for letters in product(LETTERS, repeat=n):
            word = Word(letters)
            assert ud_terminal(word).is_empty == ud_initial(word).is_empty

    @pytest.mark.parametrize("n", range(1, 9))
    def test_terminal_set_shapes(self, n: int) -> None:
        """Test that terminal sets are low singletons or low rays."""
        for word in ud_language(n):
            terminal = ud_terminal(word)
            if "E" in word:
                assert terminal.is_singleton
                assert terminal.lo <= n - 1
            else:
                assert terminal.kind == VertexKind.RAY
                assert terminal.lo <= n

    def test_language_length_one(self) -> None:
        assert [str(word) for word in ud_language(1)] == ["D", "E", "U"]


class TestClassTables:
    """Test exact follower and predecessor tables."""

    @pytest.mark.parametrize("n", range(1, 11))
    def test_follower_count_is_two_n_plus_one(self, n: int) -> None:
        assert ud_follower_table(n).count == 2 * n + 1

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [11, 12])
    def test_follower_count_at_the_cap(self, n: int) -> None:
        assert ud_follower_table(n).count == 2 * n + 1

    def test_follower_payloads_length_three(self) -> None:
        table = ud_follower_table(3)
        payloads = {vertices for _, vertices in table.representatives.values()}

        assert payloads == {
            *(VertexSet.singleton(k) for k in range(3)),
            *(VertexSet.ray(k) for k in range(4)),
        }

    def test_follower_payloads_length_one(self) -> None:
        table = ud_follower_table(1)

        assert {vertices for _, vertices in table.representatives.values()} == {
            VertexSet.ray(0),
            VertexSet.ray(1),
            VertexSet.singleton(0),
        }

    @pytest.mark.parametrize(
        "n, expected",
        [
            (1, 3),
            (2, 5),
            (8, 78),
            (9, 129),
            pytest.param(11, 346, marks=pytest.mark.slow),
            pytest.param(12, 563, marks=pytest.mark.slow),
        ],
    )
    def test_predecessor_counts(self, n: int, expected: int) -> None:
        assert ud_predecessor_table(n).count == expected

    @pytest.mark.parametrize(
        "n",
        [7, 8, 9, 10, pytest.param(11, marks=pytest.mark.slow), pytest.param(12, marks=pytest.mark.slow)],
    )
    def test_predecessor_count_lower_bound(self, n: int) -> None:
        count = ud_predecessor_table(n).count

        assert count >= 2 ** (n // 4)
        assert count >= len(ud_witness_set(n))

    def test_length_cap(self) -> None:
        with pytest.raises(LengthCapExceededError):
            ud_follower_table(13)
        with pytest.raises(LengthCapExceededError) as exc_info:
            ud_predecessor_table(5, cap=4)

        assert exc_info.value.requested == 5

    def test_positive_length_required(self) -> None:
        with pytest.raises(PreconditionError):
            ud_follower_table(0)


class TestClosedForm:
    """Test the closed form for initial intervals."""

    def test_udud(self) -> None:
        params = closed_form_params(w("UDUD"), VertexSet.interval(4, 8))

        assert params.j == 2
        assert params.exponents == (1, 0)
        assert params.interval() == VertexSet.interval(13, 29)

    def test_udddud(self) -> None:
        seed = VertexSet.interval(16, 32)

        result = ud_closed_form(w("UDDDUD"), seed)

        assert result.lo == 247
        assert result == ud_run_backward(w("UDDDUD"), seed)

    @pytest.mark.parametrize(
        "v, seed",
        [
            ("UD", VertexSet.interval(0, 4)),
            ("UUD", VertexSet.interval(4, 8)),
            ("UD", VertexSet.ray(4)),
            ("UED", VertexSet.interval(4, 8)),
            ("DU", VertexSet.singleton(1)),
        ],
    )
    def test_precondition(self, v: str, seed: VertexSet) -> None:
        with pytest.raises(ClosedFormPreconditionError):
            ud_closed_form(w(v), seed)

    @given(st.data())
    def test_closed_form_matches_backward_fold(self, data: st.DataObject) -> None:
        letters = data.draw(
            st.lists(st.sampled_from(["U", "D"]), max_size=10).filter(
                lambda v: all(not (a == b == "U") for a, b in zip(v, v[1:], strict=False))
            )
        )
        v = Word(letters)
        a = data.draw(st.integers(min_value=len(v) + 1, max_value=200))
        width = data.draw(st.integers(min_value=1, max_value=50))
        seed = VertexSet.interval(a, a + width)

        assert ud_closed_form(v, seed) == ud_run_backward(v, seed)


class TestWitnesses:
    """Test the constructive witnesses."""

    def test_witness_set_sizes(self) -> None:
        assert len(ud_witness_set(8)) == 8
        assert len(ud_witness_set(7)) == 5

    def test_witness_set_needs_length_above_six(self) -> None:
        with pytest.raises(WitnessPreconditionError):
            ud_witness_set(6)

    def test_witness_suffix_initial_set(self) -> None:
        assert witness_suffix(8) == w("DDDE")
        assert ud_initial(witness_suffix(8)) == VertexSet.interval(4, 8)

    @pytest.mark.parametrize("n", range(7, 13))
    def test_witness_set_has_distinct_predecessor_sets(self, n: int) -> None:
        witnesses = ud_witness_set(n)
        initials = [ud_initial(word) for word in witnesses]

        assert all(word.length == n for word in witnesses)
        assert not any(initial.is_empty for initial in initials)
        assert len(set(initials)) == len(witnesses)

    @pytest.mark.parametrize("n", range(7, 13))
    def test_witness_closed_form_matches_fold(self, n: int) -> None:
        suffix = witness_suffix(n)
        seed = ud_initial(suffix)

        for word in ud_witness_set(n):
            assert ud_closed_form(word[: n // 2], seed) == ud_initial(word)

    def test_follower_witness_examples(self) -> None:
        assert ud_follower_witness(0) == w("E")
        assert ud_follower_witness(1) == w("DE")
        assert ud_follower_witness(2) == w("UDDE")

    @pytest.mark.parametrize("k", range(0, 9))
    def test_follower_witness_contract(self, k: int) -> None:
        """Test legality from k and from [k,inf), illegality from anything above k."""
        witness = ud_follower_witness(k)

        assert ud_run_forward(VertexSet.singleton(k), witness)
        assert ud_run_forward(VertexSet.ray(k), witness)
        assert not ud_run_forward(VertexSet.ray(k + 1), witness)
        for above in range(k + 1, k + 9):
            assert not ud_run_forward(VertexSet.singleton(above), witness)

    @pytest.mark.parametrize("k", range(0, 9))
    def test_ray_witness_contract(self, k: int) -> None:
        witness = ud_ray_witness(k)

        assert ud_run_forward(VertexSet.ray(k), witness)
        assert not ud_run_forward(VertexSet.singleton(k), witness)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_separating_words_separate(self, n: int) -> None:
        """Test that every pair of distinct terminal sets is separated."""
        terminals = sorted({ud_terminal(word) for word in ud_language(n)}, key=str)

        for i, first in enumerate(terminals):
            for second in terminals[i + 1 :]:
                separator = ud_separating_word(first, second)
                assert bool(ud_run_forward(first, separator)) != bool(
                    ud_run_forward(second, separator)
                )

    def test_separating_word_rejects_other_shapes(self) -> None:
        with pytest.raises(PreconditionError):
            ud_separating_word(VertexSet.interval(2, 5), VertexSet.ray(0))
        with pytest.raises(PreconditionError):
            ud_separating_word(VertexSet.ray(1), VertexSet.ray(1))

    @pytest.mark.parametrize(
        "n", [*range(1, 7), *(pytest.param(n, marks=pytest.mark.slow) for n in (7, 8, 9))]
    )
    def test_predecessor_witness_contract(self, n: int) -> None:
        """Test that E U^k w is legal exactly when k is an initial vertex of w."""
        for word in ud_language(n):
            initial = ud_initial(word)
            for k in range(2 * n + 4):
                context = ud_predecessor_witness(k)
                assert (not ud_terminal(context + word).is_empty) == (k in initial)
