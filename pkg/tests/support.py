"""Shared fixtures-by-hand: tiny named automata and seeded random generators."""

from __future__ import annotations

import random

from padfa import (
    Acceptor,
    IntersectionInstance,
    PartialDfa,
    StateSet,
    coreachable_to,
    is_strongly_connected,
    reachable_from,
)


def m2() -> PartialDfa:
    """Two states, one letter funneling everything into state 1."""
    return PartialDfa.from_map(2, ["a"], {(0, "a"): 1, (1, "a"): 1})


def d2() -> PartialDfa:
    """Two states, the letter defined only on state 0."""
    return PartialDfa.from_map(2, ["a"], {(0, "a"): 1})


def p2() -> PartialDfa:
    """Two states, the letter swaps them (a permutation automaton)."""
    return PartialDfa.from_map(2, ["a"], {(0, "a"): 1, (1, "a"): 0})


def c4() -> PartialDfa:
    """The classic 4-state example whose shortest rank-1 word has length 9:
    letter a cycles the states, letter b moves 0 to 1 and fixes the rest."""
    return PartialDfa.from_map(
        4,
        ["a", "b"],
        {
            (0, "a"): 1,
            (1, "a"): 2,
            (2, "a"): 3,
            (3, "a"): 0,
            (0, "b"): 1,
            (1, "b"): 1,
            (2, "b"): 2,
            (3, "b"): 3,
        },
    )


def letters(count: int) -> list[str]:
    return ["a", "b", "c", "d"][:count]


def random_partial_dfa(
    rng: random.Random, n: int, letter_count: int, density: float
) -> PartialDfa:
    rows = tuple(
        tuple(
            rng.randrange(n) if rng.random() < density else None
            for _ in range(letter_count)
        )
        for _ in range(n)
    )
    return PartialDfa(n, tuple(letters(letter_count)), rows)


def random_sc_dfa(
    rng: random.Random,
    max_states: int = 8,
    max_letters: int = 3,
    density_range: tuple[float, float] = (0.6, 1.0),
) -> PartialDfa:
    """Rejection-sample a strongly connected partial DFA."""
    while True:
        n = rng.randint(1, max_states)
        k = rng.randint(1, max_letters)
        density = rng.uniform(*density_range)
        dfa = random_partial_dfa(rng, n, k, density)
        if is_strongly_connected(dfa):
            return dfa


def random_acceptor(
    rng: random.Random,
    max_states: int = 7,
    max_letters: int = 3,
    accept_probability: float = 0.45,
) -> Acceptor:
    n = rng.randint(1, max_states)
    k = rng.randint(1, max_letters)
    dfa = random_partial_dfa(rng, n, k, rng.uniform(0.5, 1.0))
    accepting = StateSet.from_iterable(
        n, [s for s in range(n) if rng.random() < accept_probability]
    )
    return Acceptor(dfa, rng.randrange(n), accepting)


def random_permutation_acceptor(
    rng: random.Random, max_states: int = 6, max_letters: int = 3
) -> Acceptor:
    """Strongly connected automaton whose letters are permutations, with a
    nonempty accepting set."""
    while True:
        n = rng.randint(1, max_states)
        k = rng.randint(1, max_letters)
        rows: list[list[int]] = [[] for _ in range(n)]
        for _ in range(k):
            perm = list(range(n))
            rng.shuffle(perm)
            for state in range(n):
                rows[state].append(perm[state])
        dfa = PartialDfa(
            n, tuple(letters(k)), tuple(tuple(row) for row in rows)
        )
        if not is_strongly_connected(dfa):
            continue
        accepting = [s for s in range(n) if rng.random() < 0.5]
        if not accepting:
            accepting = [rng.randrange(n)]
        return Acceptor(dfa, rng.randrange(n), StateSet.from_iterable(n, accepting))


def random_complete_acceptor(
    rng: random.Random,
    n: int,
    alphabet: tuple[str, ...],
    accept_probability: float = 0.5,
) -> Acceptor:
    rows = tuple(
        tuple(rng.randrange(n) for _ in alphabet) for _ in range(n)
    )
    accepting = StateSet.from_iterable(
        n, [s for s in range(n) if rng.random() < accept_probability]
    )
    return Acceptor(PartialDfa(n, alphabet, rows), rng.randrange(n), accepting)


def random_instance(
    rng: random.Random,
    max_machines: int = 3,
    max_states: int = 3,
    alphabet: tuple[str, ...] = ("a", "b"),
) -> IntersectionInstance:
    count = rng.randint(1, max_machines)
    return IntersectionInstance(
        tuple(
            random_complete_acceptor(rng, rng.randint(1, max_states), alphabet)
            for _ in range(count)
        )
    )


def _accepting_reachable(machine: Acceptor) -> bool:
    reachable = reachable_from(machine.dfa, [machine.initial])
    return any(s in machine.accepting for s in reachable)


def random_saturation_instance(
    rng: random.Random,
    max_machines: int = 2,
    max_states: int = 3,
    alphabet: tuple[str, ...] = ("a", "b"),
) -> IntersectionInstance:
    """Instance where every machine has an accepting state reachable from
    its initial state (the saturation gadget's precondition).  Accepting
    sets are kept sparse so that empty intersections stay represented."""
    while True:
        count = rng.randint(1, max_machines)
        machines = tuple(
            random_complete_acceptor(
                rng, rng.randint(1, max_states), alphabet, accept_probability=0.35
            )
            for _ in range(count)
        )
        if all(_accepting_reachable(m) for m in machines):
            return IntersectionInstance(machines)


def _complete_gadget_assumptions(machine: Acceptor) -> bool:
    n = machine.dfa.state_count
    if len(reachable_from(machine.dfa, [machine.initial])) != n:
        return False
    accepting = list(machine.accepting)
    if not accepting or len(coreachable_to(machine.dfa, accepting)) != n:
        return False
    return len(accepting) < n


def random_complete_gadget_instance(
    rng: random.Random,
    total_states: int = 5,
    alphabet: tuple[str, ...] = ("a", "b"),
) -> IntersectionInstance:
    """Instance meeting the complete-gadget assumptions: per machine, all
    states reachable, accepting reachable from everywhere, at least one word
    accepted and at least one rejected; machine sizes sum to at most
    ``total_states``."""
    while True:
        count = rng.randint(1, 2)
        sizes = []
        remaining = total_states
        ok = True
        for i in range(count):
            low = 2  # needs both an accepting and a non-accepting state
            high = remaining - low * (count - i - 1)
            if high < low:
                ok = False
                break
            sizes.append(rng.randint(low, high))
            remaining -= sizes[-1]
        if not ok:
            continue
        machines = tuple(
            random_complete_acceptor(rng, size, alphabet, accept_probability=0.4)
            for size in sizes
        )
        if all(_complete_gadget_assumptions(m) for m in machines):
            return IntersectionInstance(machines)


def random_word(rng: random.Random, letter_count: int, max_len: int) -> tuple[int, ...]:
    return tuple(
        rng.randrange(letter_count) for _ in range(rng.randint(0, max_len))
    )


def ends_with_letter(letter: str, alphabet: tuple[str, ...] = ("a", "b")) -> Acceptor:
    """Two-state complete acceptor for words whose last letter is ``letter``."""
    delta = {}
    for name in alphabet:
        target = 1 if name == letter else 0
        delta[(0, name)] = target
        delta[(1, name)] = target
    return Acceptor(
        PartialDfa.from_map(2, alphabet, delta), 0, StateSet.from_iterable(2, [1])
    )


def disjoint_instance() -> IntersectionInstance:
    """A no-instance whose machines still meet every gadget assumption."""
    return IntersectionInstance((ends_with_letter("a"), ends_with_letter("b")))


def parity_instance() -> IntersectionInstance:
    """Even-length against odd-length words: another assumption-satisfying
    no-instance with a different shape (the empty word splits them)."""
    flip = PartialDfa.from_map(
        2, ["a", "b"], {(0, "a"): 1, (0, "b"): 1, (1, "a"): 0, (1, "b"): 0}
    )
    even = Acceptor(flip, 0, StateSet.from_iterable(2, [0]))
    odd = Acceptor(flip, 0, StateSet.from_iterable(2, [1]))
    return IntersectionInstance((even, odd))
