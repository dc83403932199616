"""Rank computation for partial DFAs.

Two routes are provided.  ``exact_rank`` runs a breadth-first search over
the reachable nonempty subsets of the power automaton, so it is exact for
any partial DFA but exponential in the worst case; it is intended for small
state counts (roughly n <= 16) and fails loudly via the search budget
instead of hanging.  ``min_rank_word_sc`` is the polynomial algorithm for
strongly connected automata: it repeatedly merges a pair of surviving
states by solving reachability in the pair automaton.

Both produce deterministic witnesses: results do not depend on execution
order or hash seeds, only on the automaton and the declared letter order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .core import DEFAULT_BUDGET, PartialDfa, SearchBudget, Word
from .graphs import is_strongly_connected, pair_automaton


@dataclass(frozen=True)
class RankResult:
    """Minimum nonzero image size together with a word achieving it."""

    rank: int
    witness: Word

    @property
    def word_length(self) -> int:
        return len(self.witness)


def _reconstruct(
    parents: dict[int, tuple[int, int]], start: int, mask: int
) -> Word:
    letters: list[int] = []
    while mask != start:
        mask, letter = parents[mask]
        letters.append(letter)
    return tuple(reversed(letters))


def _exact_rank(dfa: PartialDfa, budget: SearchBudget) -> RankResult:
    if dfa.state_count == 0:
        raise ValueError("rank is undefined for the empty automaton")
    n = dfa.state_count
    full = (1 << n) - 1
    columns = [
        [row[a] for row in dfa.transitions] for a in range(dfa.letter_count)
    ]

    parents: dict[int, tuple[int, int]] = {}
    visited = {full}
    budget.spend()
    best_mask = full
    best_size = n
    if best_size == 1:
        return RankResult(1, ())
    queue = deque([full])
    while queue:
        mask = queue.popleft()
        for letter, column in enumerate(columns):
            new = 0
            bits = mask
            while bits:
                low = bits & -bits
                target = column[low.bit_length() - 1]
                if target is not None:
                    new |= 1 << target
                bits ^= low
            # Rank counts nonzero image sizes only; the empty set is also
            # absorbing, so there is nothing to explore beyond it.
            if new == 0 or new in visited:
                continue
            visited.add(new)
            budget.spend()
            parents[new] = (mask, letter)
            size = new.bit_count()
            if size < best_size:
                best_size = size
                best_mask = new
                if size == 1:
                    return RankResult(1, _reconstruct(parents, full, new))
            queue.append(new)
    return RankResult(best_size, _reconstruct(parents, full, best_mask))


def exact_rank(dfa: PartialDfa, budget: int | SearchBudget = DEFAULT_BUDGET) -> RankResult:
    """Exact rank of the automaton and a shortest word attaining it.

    Breadth-first over reachable subsets, expanding letters in declaration
    order, so the witness is the length-then-lexicographically first word
    reaching a minimum-size image.  The empty word already attains rank n.
    """
    return _exact_rank(dfa, SearchBudget.ensure(budget))


def is_synchronizing(
    dfa: PartialDfa, budget: int | SearchBudget = DEFAULT_BUDGET
) -> tuple[bool, Word | None]:
    """Whether some word has rank 1; returns the witness when one exists."""
    result = _exact_rank(dfa, SearchBudget.ensure(budget))
    if result.rank == 1:
        return True, result.witness
    return False, None


def min_rank_word_sc(dfa: PartialDfa) -> RankResult:
    """Minimum-rank word for a strongly connected partial DFA in polynomial time.

    Keeps a surviving set S (initially all states) and a word w (initially
    empty).  While some pair of S can reach a singleton in the pair
    automaton, append a shortest such merging word (choosing the pair with
    the shortest word, ties broken by smallest state indices, and at each
    step the smallest letter moving closer) and replace S by its image.
    Each round strictly shrinks S, and when no pair of S merges, |S| is the
    rank of the automaton.
    """
    if dfa.state_count == 0:
        raise ValueError("rank is undefined for the empty automaton")
    if not is_strongly_connected(dfa):
        raise ValueError("min_rank_word_sc requires a strongly connected automaton")

    pairs = pair_automaton(dfa)
    dist, policy = pairs.merge_policy()

    mask = (1 << dfa.state_count) - 1
    witness: list[int] = []
    while True:
        best: tuple[int, int, int] | None = None
        bits = mask
        members = []
        while bits:
            low = bits & -bits
            members.append(low.bit_length() - 1)
            bits ^= low
        for i, p in enumerate(members):
            for q in members[i + 1 :]:
                d = dist[pairs.pair_index(p, q)]
                if d is not None and (best is None or (d, p, q) < best):
                    best = (d, p, q)
        if best is None:
            break
        _, p, q = best
        node = pairs.pair_index(p, q)
        segment: list[int] = []
        while dist[node] != 0:
            letter = policy[node]
            assert letter is not None
            segment.append(letter)
            node = pairs.step[node][letter]
        # Applying the merging word to all of S only shrinks it further; the
        # chosen pair guarantees at least one survivor and strict progress.
        mask = dfa.image_mask(mask, tuple(segment))
        witness.extend(segment)
    return RankResult(mask.bit_count(), tuple(witness))


def rank_word_length_bound(n: int, r: int) -> int:
    """Length bound (n-1)((n-r)(n+2)-2)/2 for a shortest minimum-rank word
    in an n-state strongly connected partial DFA of rank r.

    For r = n the formula is negative (-(n-1)); the empty word already has
    rank n, so the value is clamped to 0.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if not 1 <= r <= n:
        raise ValueError("r must satisfy 1 <= r <= n")
    value = (n - 1) * ((n - r) * (n + 2) - 2)
    # The product is always even: n odd makes n-1 even, n even makes n+2 even.
    return max(0, value // 2)
