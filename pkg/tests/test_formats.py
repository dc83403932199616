import random

import pytest

from padfa import Acceptor, StateSet
from padfa.formats import (
    ParseError,
    parse_automaton,
    parse_instance,
    serialize_acceptor,
    serialize_automaton,
    serialize_instance,
    to_dot,
)

from support import c4, m2, p2, random_instance, random_partial_dfa

M2_TEXT = """\
# two states funneling into 1
states: 2
alphabet: a
initial: 0
accepting: 1
trans: 0 a 1
trans: 1 a 1
"""


class TestParseAutomaton:
    def test_basic_file(self):
        loaded = parse_automaton(M2_TEXT)
        assert loaded.dfa == m2()
        assert loaded.initial == 0
        assert loaded.accepting == StateSet.from_iterable(2, [1])

    def test_optional_headers_absent(self):
        loaded = parse_automaton("states: 2\nalphabet: a\ntrans: 0 a 1\n")
        assert loaded.initial is None
        assert loaded.accepting is None
        with pytest.raises(ParseError):
            loaded.require_acceptor()

    def test_empty_accepting_line_is_empty_set(self):
        loaded = parse_automaton("states: 1\nalphabet: a\ninitial: 0\naccepting:\n")
        assert loaded.accepting == StateSet(1)

    def test_unknown_key_rejected(self):
        with pytest.raises(ParseError):
            parse_automaton("states: 1\nalphabet: a\ncolor: blue\n")

    def test_duplicate_transition_rejected(self):
        with pytest.raises(ParseError):
            parse_automaton(
                "states: 2\nalphabet: a\ntrans: 0 a 1\ntrans: 0 a 0\n"
            )

    def test_out_of_range_target_rejected(self):
        with pytest.raises(ParseError):
            parse_automaton("states: 1\nalphabet: a\ntrans: 0 a 5\n")

    def test_unknown_letter_rejected(self):
        with pytest.raises(ParseError):
            parse_automaton("states: 1\nalphabet: a\ntrans: 0 b 0\n")

    def test_missing_states_rejected(self):
        with pytest.raises(ParseError):
            parse_automaton("alphabet: a\n")

    def test_non_integer_index_rejected(self):
        with pytest.raises(ParseError):
            parse_automaton("states: x\nalphabet: a\n")


class TestRoundTrip:
    def test_corpus_of_twenty_files(self):
        rng = random.Random(601)
        corpus = [
            (m2(), 0, StateSet.from_iterable(2, [1])),
            (p2(), 0, StateSet.from_iterable(2, [0])),
            (p2(), None, None),
            (c4(), None, None),
        ]
        while len(corpus) < 20:
            n = rng.randint(1, 7)
            dfa = random_partial_dfa(rng, n, rng.randint(1, 3), rng.uniform(0.2, 1.0))
            if rng.random() < 0.5:
                corpus.append((dfa, None, None))
            else:
                members = [s for s in range(n) if rng.random() < 0.5]
                corpus.append(
                    (dfa, rng.randrange(n), StateSet.from_iterable(n, members))
                )
        for dfa, initial, accepting in corpus:
            text = serialize_automaton(dfa, initial, accepting)
            loaded = parse_automaton(text)
            assert loaded.dfa == dfa
            assert loaded.initial == initial
            assert loaded.accepting == accepting
            assert serialize_automaton(loaded.dfa, loaded.initial, loaded.accepting) == text

    def test_instances_round_trip(self):
        rng = random.Random(602)
        for _ in range(10):
            instance = random_instance(rng)
            text = serialize_instance(instance)
            assert parse_instance(text).machines == instance.machines

    def test_acceptor_serializer(self):
        acc = Acceptor(m2(), 0, StateSet.from_iterable(2, [1]))
        assert parse_automaton(serialize_acceptor(acc)).require_acceptor() == acc


class TestParseInstance:
    def test_must_start_with_alphabet(self):
        with pytest.raises(ParseError):
            parse_instance("machine:\nstates: 1\ninitial: 0\n")

    def test_machine_needs_initial(self):
        with pytest.raises(ParseError):
            parse_instance("alphabet: a\nmachine:\nstates: 1\ntrans: 0 a 0\n")

    def test_incomplete_machine_rejected(self):
        with pytest.raises(ParseError):
            parse_instance("alphabet: a\nmachine:\nstates: 1\ninitial: 0\n")

    def test_machine_cannot_redeclare_alphabet(self):
        with pytest.raises(ParseError):
            parse_instance(
                "alphabet: a\nmachine:\nstates: 1\ninitial: 0\n"
                "alphabet: b\ntrans: 0 a 0\n"
            )


class TestDot:
    def test_shapes_and_edges(self):
        loaded = parse_automaton(M2_TEXT)
        dot = to_dot(loaded)
        assert dot.startswith("digraph")
        assert "1 [shape=doublecircle];" in dot
        assert "0 [shape=circle];" in dot
        assert "__start -> 0;" in dot
        assert '0 -> 1 [label="a"];' in dot

    def test_undefined_transitions_omitted(self):
        loaded = parse_automaton("states: 2\nalphabet: a\ntrans: 0 a 1\n")
        dot = to_dot(loaded)
        assert "1 ->" not in dot
        assert "__start" not in dot

    def test_parallel_edges_share_a_label(self):
        text = "states: 1\nalphabet: a b\ntrans: 0 a 0\ntrans: 0 b 0\n"
        dot = to_dot(parse_automaton(text))
        assert '0 -> 0 [label="a, b"];' in dot
