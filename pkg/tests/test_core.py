import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from padfa import PartialDfa, StateSet

from support import d2, letters, m2, p2


@st.composite
def partial_dfas(draw, max_states=5, max_letters=3):
    n = draw(st.integers(1, max_states))
    k = draw(st.integers(1, max_letters))
    rows = draw(
        st.lists(
            st.lists(
                st.one_of(st.none(), st.integers(0, n - 1)),
                min_size=k,
                max_size=k,
            ),
            min_size=n,
            max_size=n,
        )
    )
    return PartialDfa(n, tuple(letters(k)), tuple(tuple(row) for row in rows))


@st.composite
def dfa_and_words(draw, max_word=6):
    dfa = draw(partial_dfas())
    u = tuple(draw(st.lists(st.integers(0, dfa.letter_count - 1), max_size=max_word)))
    v = tuple(draw(st.lists(st.integers(0, dfa.letter_count - 1), max_size=max_word)))
    members = draw(st.lists(st.integers(0, dfa.state_count - 1), max_size=dfa.state_count))
    return dfa, StateSet.from_iterable(dfa.state_count, members), u, v


class TestStep:
    def test_m2_lookup(self):
        assert m2().step(0, 0) == 1

    def test_d2_undefined(self):
        assert d2().step(1, 0) is None

    def test_p2_swap(self):
        assert p2().step(1, 0) == 0

    def test_bad_state_rejected(self):
        with pytest.raises(ValueError):
            m2().step(2, 0)

    def test_bad_letter_rejected(self):
        with pytest.raises(ValueError):
            m2().step(0, 1)


class TestImage:
    def test_m2_merges(self):
        dfa = m2()
        assert dfa.image(StateSet.full(2), (0,)) == StateSet.from_iterable(2, [1])

    def test_empty_word_is_identity(self):
        dfa = p2()
        s = StateSet.from_iterable(2, [0])
        assert dfa.image(s, ()) == s

    def test_undefined_drops_state(self):
        dfa = d2()
        assert dfa.image(StateSet.from_iterable(2, [1]), (0,)) == StateSet(2)


class TestRankOfWord:
    def test_permutation_preserves_cardinality(self):
        assert p2().rank_of_word(StateSet.full(2), (0, 0, 0)) == 2

    def test_m2_word_rank_one(self):
        assert m2().rank_of_word(StateSet.full(2), (0,)) == 1

    def test_d2_word_rank_zero(self):
        assert d2().rank_of_word(StateSet.full(2), (0, 0)) == 0

    def test_empty_word_full_set(self):
        assert m2().rank_of_word(StateSet.full(2), ()) == 2


class TestClassification:
    def test_m2(self):
        assert m2().is_complete()
        assert not m2().is_permutation()

    def test_d2(self):
        assert not d2().is_complete()

    def test_p2(self):
        assert p2().is_permutation()
        assert p2().is_complete()


class TestValidation:
    def test_duplicate_letter_names(self):
        with pytest.raises(ValueError):
            PartialDfa(1, ("a", "a"), ((0, 0),))

    def test_empty_letter_name(self):
        with pytest.raises(ValueError):
            PartialDfa(1, ("",), ((0,),))

    def test_target_out_of_range(self):
        with pytest.raises(ValueError):
            PartialDfa(1, ("a",), ((3,),))

    def test_stateset_out_of_universe(self):
        with pytest.raises(ValueError):
            StateSet.from_iterable(2, [2])


class TestStateSet:
    def test_operations(self):
        a = StateSet.from_iterable(4, [0, 1])
        b = StateSet.from_iterable(4, [1, 3])
        assert a.union(b) == StateSet.from_iterable(4, [0, 1, 3])
        assert a.intersection(b) == StateSet.from_iterable(4, [1])
        assert a.difference(b) == StateSet.from_iterable(4, [0])
        assert a.complement() == StateSet.from_iterable(4, [2, 3])
        assert len(a) == 2 and 1 in a and 2 not in a
        assert list(b) == [1, 3]
        assert not StateSet(4)

    def test_mismatched_universes(self):
        with pytest.raises(ValueError):
            StateSet.full(2).union(StateSet.full(3))


@settings(max_examples=80, deadline=None)
@given(dfa_and_words())
def test_image_composition_law(data):
    dfa, states, u, v = data
    via_u = dfa.image(dfa.image(states, u), v)
    assert dfa.image(states, u + v) == via_u


@settings(max_examples=80, deadline=None)
@given(dfa_and_words())
def test_rank_monotone_nonincreasing(data):
    dfa, _, u, v = data
    full = StateSet.full(dfa.state_count)
    assert dfa.rank_of_word(full, u + v) <= dfa.rank_of_word(full, u)


@settings(max_examples=80, deadline=None)
@given(dfa_and_words())
def test_image_monotone_in_the_set(data):
    dfa, states, u, _ = data
    full = StateSet.full(dfa.state_count)
    assert dfa.image(states, u).issubset(dfa.image(full, u))


@settings(max_examples=60, deadline=None)
@given(partial_dfas(), st.lists(st.integers(0, 2), max_size=8))
def test_permutation_letters_preserve_full_rank(dfa, raw_word):
    if not dfa.is_permutation():
        return
    word = tuple(a % dfa.letter_count for a in raw_word)
    assert dfa.rank_of_word(StateSet.full(dfa.state_count), word) == dfa.state_count
