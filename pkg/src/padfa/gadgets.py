"""Constructions turning automata-intersection instances into analysis gadgets.

The source problem is finite-automata intersection (FAI): given complete
acceptors over one alphabet, does some word get accepted by all of them?
``has_common_word`` answers it directly by product search and serves as the
oracle against which the four gadget constructions are verified:

* ``build_sync_gadget``        -- common word exists  <=>  gadget synchronizing
* ``build_saturation_gadget``  -- common word exists  <=>  whole state set
                                  saturated by a minimum-rank word
* ``strongly_connect_gadget``  -- same verdict, strongly connected gadget
* ``binarize`` / ``binarize_with_selfloop`` -- same verdict, binary alphabet
* ``build_complete_gadget``    -- same verdict, complete strongly connected
                                  gadget and a distinguished target set

Every construction is deterministic: fresh letter names, target choices and
state numbering depend only on the instance.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Any, Optional

from .core import (
    DEFAULT_BUDGET,
    Acceptor,
    PartialDfa,
    SearchBudget,
    StateSet,
    Word,
)
from .graphs import _closure, _successors, coreachable_to, reachable_from


@dataclass(frozen=True)
class IntersectionInstance:
    """A finite-automata intersection instance: complete acceptors sharing
    one alphabet."""

    machines: tuple[Acceptor, ...]

    def __post_init__(self):
        if not self.machines:
            raise ValueError("an instance needs at least one machine")
        alphabet = self.machines[0].dfa.alphabet
        for i, machine in enumerate(self.machines):
            if machine.is_empty:
                raise ValueError(f"machine {i} has no states")
            if machine.dfa.alphabet != alphabet:
                raise ValueError(f"machine {i} uses a different alphabet")
            if not machine.dfa.is_complete():
                raise ValueError(f"machine {i} is not complete")

    @property
    def alphabet(self) -> tuple[str, ...]:
        return self.machines[0].dfa.alphabet


@dataclass
class GadgetLayout:
    """Bookkeeping for a constructed gadget.

    ``state_map`` sends (machine index, original state) to the gadget state
    index (for binarization the single input automaton is machine 0 and the
    value is its embedding into the first letter column).  ``special_states``
    and ``letter_map`` locate the construction's added states and letters by
    their role names; ``meta`` carries construction-specific extras such as
    twin pairings or binarization letter order.
    """

    state_map: dict[tuple[int, int], int] = field(default_factory=dict)
    special_states: dict[str, int] = field(default_factory=dict)
    letter_map: dict[str, int] = field(default_factory=dict)
    meta: dict[str, Any] = field(default_factory=dict)


def _fresh_name(base: str, taken: set[str]) -> str:
    name = base
    counter = 2
    while name in taken:
        name = f"{base}{counter}"
        counter += 1
    taken.add(name)
    return name


def has_common_word(
    instance: IntersectionInstance, budget: int | SearchBudget = DEFAULT_BUDGET
) -> Word | None:
    """Shortest word accepted by every machine, or ``None``.

    Breadth-first search over the product automaton, letters in declaration
    order, so the result is the length-then-lexicographically first common
    word.
    """
    shared = SearchBudget.ensure(budget)
    machines = instance.machines
    letter_count = len(instance.alphabet)

    start = tuple(m.initial for m in machines)
    parents: dict[tuple, tuple[tuple, int]] = {}
    visited = {start}
    shared.spend()

    def accepts(product: tuple) -> bool:
        return all(state in m.accepting for state, m in zip(product, machines))

    if accepts(start):
        return ()
    queue = deque([start])
    while queue:
        product = queue.popleft()
        for letter in range(letter_count):
            new = tuple(
                m.dfa.transitions[state][letter]
                for state, m in zip(product, machines)
            )
            if new in visited:
                continue
            visited.add(new)
            shared.spend()
            parents[new] = (product, letter)
            if accepts(new):
                letters = []
                node = new
                while node != start:
                    node, used = parents[node]
                    letters.append(used)
                return tuple(reversed(letters))
            queue.append(new)
    return None


def _universal_machine(alphabet: tuple[str, ...]) -> Acceptor:
    row = tuple(0 for _ in alphabet)
    return Acceptor(PartialDfa(1, alphabet, (row,)), 0, StateSet.full(1))


def build_sync_gadget(
    instance: IntersectionInstance,
) -> tuple[PartialDfa, GadgetLayout]:
    """Partial DFA that is synchronizing iff the instance has a common word.

    A one-state all-accepting machine is always appended first (it never
    changes the answer and pins the accept sink into every post-check
    image).  On top of the machines' own letters the gadget adds a reset
    letter sending each machine to its initial state and a check letter
    sending accepting states to an accept sink and the rest to a reject
    sink; both sinks self-loop on everything except the check letter, which
    is undefined there.
    """
    machines = instance.machines + (_universal_machine(instance.alphabet),)
    offsets = []
    total = 0
    for machine in machines:
        offsets.append(total)
        total += machine.dfa.state_count
    accept_sink = total
    reject_sink = total + 1

    taken = set(instance.alphabet)
    reset = _fresh_name("reset", taken)
    check = _fresh_name("check", taken)
    alphabet = instance.alphabet + (reset, check)
    base_count = len(instance.alphabet)

    rows: list[tuple[Optional[int], ...]] = []
    for i, machine in enumerate(machines):
        for state in range(machine.dfa.state_count):
            row: list[Optional[int]] = [
                offsets[i] + machine.dfa.transitions[state][a]
                for a in range(base_count)
            ]
            row.append(offsets[i] + machine.initial)
            row.append(accept_sink if state in machine.accepting else reject_sink)
            rows.append(tuple(row))
    for sink in (accept_sink, reject_sink):
        rows.append(tuple([sink] * (base_count + 1) + [None]))

    layout = GadgetLayout(
        state_map={
            (i, state): offsets[i] + state
            for i, machine in enumerate(machines)
            for state in range(machine.dfa.state_count)
        },
        special_states={"accept_sink": accept_sink, "reject_sink": reject_sink},
        letter_map={reset: base_count, check: base_count + 1},
        meta={
            "reset_letter": reset,
            "check_letter": check,
            "universal_machine_index": len(instance.machines),
        },
    )
    return PartialDfa(total + 2, alphabet, tuple(rows)), layout


def build_saturation_gadget(
    instance: IntersectionInstance,
) -> tuple[PartialDfa, GadgetLayout]:
    """Rank-1 partial DFA whose whole state set is saturated by a
    minimum-rank word iff the instance has a common word.

    Requires every machine to have an accepting state reachable from its
    initial state (this is what makes the gadget rank 1).  There is a single
    accept sink: the check letter sends accepting states there and is
    undefined on the rest, and the sink absorbs every letter.  Keeping the
    sink total is essential: a word saturating the whole state set must keep
    the sink itself alive.
    """
    for i, machine in enumerate(instance.machines):
        reachable = reachable_from(machine.dfa, [machine.initial])
        if not any(state in machine.accepting for state in reachable):
            raise ValueError(
                f"machine {i} has no accepting state reachable from its initial state"
            )

    machines = instance.machines
    offsets = []
    total = 0
    for machine in machines:
        offsets.append(total)
        total += machine.dfa.state_count
    sink = total

    taken = set(instance.alphabet)
    reset = _fresh_name("reset", taken)
    check = _fresh_name("check", taken)
    alphabet = instance.alphabet + (reset, check)
    base_count = len(instance.alphabet)

    rows: list[tuple[Optional[int], ...]] = []
    for i, machine in enumerate(machines):
        for state in range(machine.dfa.state_count):
            row: list[Optional[int]] = [
                offsets[i] + machine.dfa.transitions[state][a]
                for a in range(base_count)
            ]
            row.append(offsets[i] + machine.initial)
            row.append(sink if state in machine.accepting else None)
            rows.append(tuple(row))
    rows.append(tuple([sink] * (base_count + 2)))

    layout = GadgetLayout(
        state_map={
            (i, state): offsets[i] + state
            for i, machine in enumerate(machines)
            for state in range(machine.dfa.state_count)
        },
        special_states={"accept_sink": sink},
        letter_map={reset: base_count, check: base_count + 1},
        meta={"reset_letter": reset, "check_letter": check},
    )
    return PartialDfa(total + 1, alphabet, tuple(rows)), layout


def _greedy_hub_targets(dfa: PartialDfa, hub: int) -> list[int]:
    """Targets for new hub-to-target letters making the automaton strongly
    connected: repeatedly the lowest-indexed state not yet reachable from
    the hub (counting previously added hub edges)."""
    if not 0 <= hub < dfa.state_count:
        raise ValueError(f"hub state {hub} out of range")
    if len(coreachable_to(dfa, [hub])) != dfa.state_count:
        raise ValueError("every state must reach the hub")
    successors = _successors(dfa)
    reach = _closure(successors, [hub])
    targets = []
    while len(reach) < dfa.state_count:
        target = min(s for s in range(dfa.state_count) if s not in reach)
        targets.append(target)
        reach |= _closure(successors, [target])
    return targets


def strongly_connect_gadget(
    dfa: PartialDfa, hub: int
) -> tuple[PartialDfa, GadgetLayout]:
    """Add jump letters from ``hub`` until the automaton is strongly connected.

    Each added letter maps the hub to one previously unreachable state and
    is undefined everywhere else, so no new behavior is available before
    reaching the hub.  An already strongly connected input is returned
    unchanged (zero letters added).
    """
    targets = _greedy_hub_targets(dfa, hub)
    taken = set(dfa.alphabet)
    names = [_fresh_name(f"jump{i + 1}", taken) for i in range(len(targets))]
    rows = []
    for state, row in enumerate(dfa.transitions):
        extension = tuple(
            target if state == hub else None for target in targets
        )
        rows.append(row + extension)
    layout = GadgetLayout(
        special_states={"hub": hub},
        letter_map={
            name: dfa.letter_count + i for i, name in enumerate(names)
        },
        meta={"targets": list(targets)},
    )
    return (
        PartialDfa(dfa.state_count, dfa.alphabet + tuple(names), tuple(rows)),
        layout,
    )


def binarize(dfa: PartialDfa, last_letter: str) -> tuple[PartialDfa, GadgetLayout]:
    """Encode an arbitrary alphabet into {0, 1}.

    States become (state, letter-column) pairs, laid out row-major.  Letter
    "0" advances the column (the designated last letter's column absorbs),
    and letter "1" applies the column's letter and returns to column 0.
    The designated letter is moved to the end of the enumeration, keeping
    the relative order of the others; when it is total, reading 0^(L-1) 1
    from anywhere lands in column 0 on that letter's image.
    """
    last = dfa.letter_index(last_letter)
    order = [a for a in range(dfa.letter_count) if a != last] + [last]
    columns = len(order)
    n = dfa.state_count

    def encode(state: int, position: int) -> int:
        return state * columns + position

    rows: list[tuple[Optional[int], ...]] = []
    for state in range(n):
        for position in range(columns):
            advance = encode(
                state, position + 1 if position < columns - 1 else position
            )
            target = dfa.transitions[state][order[position]]
            apply = None if target is None else encode(target, 0)
            rows.append((advance, apply))

    layout = GadgetLayout(
        state_map={(0, state): encode(state, 0) for state in range(n)},
        letter_map={"0": 0, "1": 1},
        meta={
            "letter_order": [dfa.alphabet[a] for a in order],
            "input_state_count": n,
        },
    )
    return PartialDfa(n * columns, ("0", "1"), tuple(rows)), layout


def binarize_with_selfloop(dfa: PartialDfa) -> tuple[PartialDfa, GadgetLayout]:
    """Binarize after appending a fresh total self-loop letter as the last
    letter (for automata with no suitable total letter of their own)."""
    taken = set(dfa.alphabet)
    stay = _fresh_name("stay", taken)
    rows = tuple(
        row + (state,) for state, row in enumerate(dfa.transitions)
    )
    extended = PartialDfa(dfa.state_count, dfa.alphabet + (stay,), rows)
    binary, layout = binarize(extended, stay)
    layout.meta["selfloop_letter"] = stay
    return binary, layout


def build_complete_gadget(
    instance: IntersectionInstance,
) -> tuple[PartialDfa, GadgetLayout, StateSet]:
    """Complete, strongly connected rank-2 automaton whose distinguished set
    is saturated by a rank-2 word iff the instance has a common word.

    Built over two mirrored copies of the saturation gadget plus a trap pair:
    the check letter now sends non-accepting states to the trap (its twin on
    the mirrored copy), traps absorb the base letters, and jump letters both
    connect the two copies and make everything strongly connected.  Every
    letter commutes with the twin pairing, so no state can ever merge with
    its twin and the rank is exactly 2.  The distinguished set is the whole
    unbarred copy plus the mirrored trap.

    Assumes, per machine: all states reachable from the initial state, an
    accepting state reachable from every state, at least one word accepted,
    and at least one word rejected.
    """
    for i, machine in enumerate(instance.machines):
        n = machine.dfa.state_count
        reachable = reachable_from(machine.dfa, [machine.initial])
        if len(reachable) != n:
            raise ValueError(f"machine {i}: not all states reachable from initial")
        accepting = list(machine.accepting)
        if not accepting or len(coreachable_to(machine.dfa, accepting)) != n:
            raise ValueError(
                f"machine {i}: some state cannot reach an accepting state"
            )
        if not any(state in machine.accepting for state in reachable):
            raise ValueError(f"machine {i}: accepts no word")
        if all(state in machine.accepting for state in reachable):
            raise ValueError(f"machine {i}: accepts every word")

    base, base_layout = build_saturation_gadget(instance)
    hub = base_layout.special_states["accept_sink"]
    targets = _greedy_hub_targets(base, hub)

    na = base.state_count
    trap = 2 * na
    trap_twin = 2 * na + 1
    total = 2 * na + 2

    def twin(state: int) -> int:
        return state + na

    taken = set(base.alphabet)
    jump_names = [_fresh_name(f"jump{i + 1}", taken) for i in range(len(targets))]
    alphabet = base.alphabet + tuple(jump_names)
    check_col = base_layout.letter_map[base_layout.meta["check_letter"]]
    base_cols = base.letter_count

    rows: list[list[Optional[int]]] = [[None] * len(alphabet) for _ in range(total)]
    for state in range(na):
        for a in range(base_cols):
            target = base.transitions[state][a]
            if target is None:
                # Only the check letter is partial in the base gadget; the
                # trap pair completes it.
                assert a == check_col
                rows[state][a] = trap
                rows[twin(state)][a] = trap_twin
            else:
                rows[state][a] = target
                rows[twin(state)][a] = twin(target)
    for a in range(base_cols):
        rows[trap][a] = trap
        rows[trap_twin][a] = trap_twin
    for j, target in enumerate(targets):
        col = base_cols + j
        for state in range(na):
            if state == hub:
                rows[state][col] = target
                rows[twin(state)][col] = twin(target)
            else:
                rows[state][col] = twin(target)
                rows[twin(state)][col] = target
        rows[trap][col] = twin(target)
        rows[trap_twin][col] = target

    gadget = PartialDfa(total, alphabet, tuple(tuple(row) for row in rows))
    assert gadget.is_complete()

    twin_of = {state: twin(state) for state in range(na)}
    twin_of[trap] = trap_twin
    layout = GadgetLayout(
        state_map=dict(base_layout.state_map),
        special_states={
            "accept_sink": hub,
            "accept_sink_twin": twin(hub),
            "trap": trap,
            "trap_twin": trap_twin,
        },
        letter_map={
            **base_layout.letter_map,
            **{name: base_cols + i for i, name in enumerate(jump_names)},
        },
        meta={
            **base_layout.meta,
            "targets": list(targets),
            "twin_of": twin_of,
        },
    )
    distinguished = StateSet.from_iterable(
        total, list(range(na)) + [trap_twin]
    )
    return gadget, layout, distinguished
