"""Deciding whether an acceptor recognizes a birecurrent set.

A language is birecurrent when its minimal partial DFA and the minimal
partial DFA of its reversal are both strongly connected.  Two independent
deciders are provided and cross-checked:

* the direct route minimizes the acceptor and tests strong connectivity of
  it and of the determinization of its reversal;
* the characterization route minimizes, then asks whether the accepting set
  is saturated by a word of minimum rank.

For the empty language both return False by convention (the minimal
automaton is empty, so "strongly connected" has no meaningful reading).
The one-state corner case (initial state accepting, e.g. a language
containing the empty word recognized by a single state) follows the formal
definitions and comes out birecurrent whenever both trivial automata are
strongly connected.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .core import (
    DEFAULT_BUDGET,
    Acceptor,
    PartialDfa,
    SearchBudget,
    StateSet,
)
from .graphs import is_strongly_connected, trim
from .saturate import find_saturating_min_rank_word


class MethodDisagreement(RuntimeError):
    """The two birecurrence deciders disagreed; indicates an internal bug."""


def minimize(acceptor: Acceptor) -> Acceptor:
    """The minimal trim partial acceptor for the same language.

    Trims first, then merges language-equivalent states by partition
    refinement where "undefined" is its own transition outcome (no dead
    state is ever materialized).  The result is unique up to isomorphism;
    the empty language yields the canonical empty acceptor.
    """
    trimmed, _ = trim(acceptor)
    if trimmed.is_empty:
        return trimmed
    dfa = trimmed.dfa
    n = dfa.state_count

    block_of = [1 if s in trimmed.accepting else 0 for s in range(n)]
    while True:
        signatures: dict[tuple, list[int]] = {}
        for s in range(n):
            sig = (block_of[s],) + tuple(
                None if t is None else block_of[t] for t in dfa.transitions[s]
            )
            signatures.setdefault(sig, []).append(s)
        if len(signatures) == len(set(block_of)):
            break
        for i, members in enumerate(sorted(signatures.values())):
            for s in members:
                block_of[s] = i

    # Number blocks by first occurrence so the result is deterministic.
    renumber = {b: i for i, b in enumerate(dict.fromkeys(block_of))}
    representative = {}
    for s in range(n):
        representative.setdefault(renumber[block_of[s]], s)
    m = len(renumber)
    rows = []
    for i in range(m):
        rep = representative[i]
        rows.append(
            tuple(
                None if t is None else renumber[block_of[t]]
                for t in dfa.transitions[rep]
            )
        )
    accepting = StateSet.from_iterable(
        m, {renumber[block_of[s]] for s in trimmed.accepting}
    )
    return Acceptor(
        PartialDfa(m, dfa.alphabet, tuple(rows)),
        renumber[block_of[trimmed.initial]],
        accepting,
    )


@dataclass(frozen=True)
class SubsetAutomaton:
    """Determinization of the reversal of an acceptor.

    Nodes are the reachable nonempty subsets of the original states,
    starting from the accepting set; transitions that would reach the empty
    subset are left undefined, so the structure is itself a partial DFA over
    node indices.  A node is accepting when it contains the original
    initial state.
    """

    alphabet: tuple[str, ...]
    nodes: tuple[StateSet, ...]
    transitions: tuple[tuple[Optional[int], ...], ...]
    initial: Optional[int]
    accepting_nodes: tuple[int, ...]

    @property
    def is_empty(self) -> bool:
        return not self.nodes

    def as_dfa(self) -> PartialDfa:
        return PartialDfa(len(self.nodes), self.alphabet, self.transitions)

    def as_acceptor(self) -> Acceptor:
        """View the subset automaton as an acceptor for the reversed language."""
        return Acceptor(
            self.as_dfa(),
            self.initial,
            StateSet.from_iterable(len(self.nodes), self.accepting_nodes),
        )


def determinize_reversal(acceptor: Acceptor) -> SubsetAutomaton:
    """Subset construction on the reversed transition relation.

    Starts from the accepting set and expands only reachable nonempty
    subsets.  An empty accepting set yields the empty subset automaton.
    """
    dfa = acceptor.dfa
    if acceptor.is_empty or not acceptor.accepting:
        return SubsetAutomaton(dfa.alphabet, (), (), None, ())

    preimage = [
        [0] * dfa.state_count for _ in range(dfa.letter_count)
    ]  # [letter][target] -> mask of sources
    for source, row in enumerate(dfa.transitions):
        for letter, target in enumerate(row):
            if target is not None:
                preimage[letter][target] |= 1 << source

    start = acceptor.accepting.mask
    index = {start: 0}
    order = [start]
    rows: list[list[Optional[int]]] = []
    queue = deque([start])
    while queue:
        mask = queue.popleft()
        row: list[Optional[int]] = []
        for letter in range(dfa.letter_count):
            new = 0
            bits = mask
            while bits:
                low = bits & -bits
                new |= preimage[letter][low.bit_length() - 1]
                bits ^= low
            if new == 0:
                row.append(None)
                continue
            if new not in index:
                index[new] = len(order)
                order.append(new)
                queue.append(new)
            row.append(index[new])
        rows.append(row)

    nodes = tuple(StateSet(dfa.state_count, mask) for mask in order)
    accepting_nodes = tuple(
        i for i, mask in enumerate(order) if mask >> acceptor.initial & 1
    )
    return SubsetAutomaton(
        dfa.alphabet, nodes, tuple(tuple(row) for row in rows), 0, accepting_nodes
    )


def is_birecurrent_direct(acceptor: Acceptor) -> bool:
    """Minimize, then require the automaton and the determinization of its
    reversal to both be strongly connected."""
    minimal = minimize(acceptor)
    if minimal.is_empty:
        return False
    if not is_strongly_connected(minimal.dfa):
        return False
    reversed_subsets = determinize_reversal(minimal)
    if reversed_subsets.is_empty:
        return False
    return is_strongly_connected(reversed_subsets.as_dfa())


def is_birecurrent_characterization(
    acceptor: Acceptor, budget: int | SearchBudget = DEFAULT_BUDGET
) -> bool:
    """Minimize, then require the accepting set to be saturated by a word of
    minimum rank (and the automaton to be strongly connected)."""
    minimal = minimize(acceptor)
    if minimal.is_empty:
        return False
    if not is_strongly_connected(minimal.dfa):
        return False
    word = find_saturating_min_rank_word(minimal.dfa, minimal.accepting, budget)
    return word is not None


def is_birecurrent(
    acceptor: Acceptor, budget: int | SearchBudget = DEFAULT_BUDGET
) -> bool:
    """Run both deciders and return the shared verdict.

    A disagreement means a bug in one of them and raises
    :class:`MethodDisagreement` rather than guessing.
    """
    direct = is_birecurrent_direct(acceptor)
    characterized = is_birecurrent_characterization(acceptor, budget)
    if direct != characterized:
        raise MethodDisagreement(
            f"direct={direct} but characterization={characterized}"
        )
    return direct
