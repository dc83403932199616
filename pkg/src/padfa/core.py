"""Core data types for partial deterministic finite automata.

A partial DFA keeps its transition table as a dense (state x letter) grid
whose entries are either a target state index or ``None`` for "undefined".
Undefined stays a distinguished table value throughout: it is never patched
over with a sink state, and the image of a state set under a word simply
drops the states whose path hits an undefined entry.

All values here are immutable after construction and safe to share between
concurrent readers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Optional

Word = tuple[int, ...]
EMPTY_WORD: Word = ()

DEFAULT_BUDGET = 1 << 20


class BudgetExceededError(RuntimeError):
    """Raised when a subset/config search exceeds its visited-node budget."""


class SearchBudget:
    """Mutable countdown of how many search nodes may still be visited.

    Several searches can share one instance so that their combined work is
    capped by a single limit.
    """

    __slots__ = ("limit", "remaining")

    def __init__(self, limit: int = DEFAULT_BUDGET):
        if limit < 1:
            raise ValueError("budget must be positive")
        self.limit = limit
        self.remaining = limit

    def spend(self, amount: int = 1) -> None:
        self.remaining -= amount
        if self.remaining < 0:
            raise BudgetExceededError(
                f"search budget of {self.limit} visited nodes exhausted"
            )

    @classmethod
    def ensure(cls, value: "int | SearchBudget") -> "SearchBudget":
        if isinstance(value, SearchBudget):
            return value
        return cls(value)


@dataclass(frozen=True)
class StateSet:
    """Subset of ``range(universe)`` backed by a bitmask.

    Set operations require matching universes; ``mask`` bit ``i`` set means
    state ``i`` is a member.
    """

    universe: int
    mask: int = 0

    def __post_init__(self):
        if self.universe < 0:
            raise ValueError("universe must be non-negative")
        if self.mask < 0 or self.mask >> self.universe:
            raise ValueError(f"members out of range for universe {self.universe}")

    @classmethod
    def from_iterable(cls, universe: int, members: Iterable[int]) -> "StateSet":
        mask = 0
        for m in members:
            if not 0 <= m < universe:
                raise ValueError(f"state {m} out of range for universe {universe}")
            mask |= 1 << m
        return cls(universe, mask)

    @classmethod
    def full(cls, universe: int) -> "StateSet":
        return cls(universe, (1 << universe) - 1)

    def union(self, other: "StateSet") -> "StateSet":
        self._check(other)
        return StateSet(self.universe, self.mask | other.mask)

    def intersection(self, other: "StateSet") -> "StateSet":
        self._check(other)
        return StateSet(self.universe, self.mask & other.mask)

    def difference(self, other: "StateSet") -> "StateSet":
        self._check(other)
        return StateSet(self.universe, self.mask & ~other.mask)

    def complement(self) -> "StateSet":
        return StateSet(self.universe, ((1 << self.universe) - 1) & ~self.mask)

    def issubset(self, other: "StateSet") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def _check(self, other: "StateSet") -> None:
        if self.universe != other.universe:
            raise ValueError("state sets over different universes")

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __contains__(self, state: int) -> bool:
        return 0 <= state < self.universe and self.mask >> state & 1 == 1

    def __iter__(self) -> Iterator[int]:
        mask = self.mask
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def __repr__(self) -> str:
        return f"StateSet({self.universe}, {{{', '.join(map(str, self))}}})"


@dataclass(frozen=True)
class PartialDfa:
    """A partial deterministic finite automaton without initial/accepting data.

    ``transitions[s][a]`` is the target of state ``s`` under letter index
    ``a``, or ``None`` when undefined.  Letter order is the declaration
    order and is semantically significant (binarization enumerates the
    alphabet in this order).  ``state_count`` may be 0 only for the
    canonical empty automaton produced by trimming; analyses that need a
    nonempty state set reject it.
    """

    state_count: int
    alphabet: tuple[str, ...]
    transitions: tuple[tuple[Optional[int], ...], ...]

    def __post_init__(self):
        if self.state_count < 0:
            raise ValueError("state_count must be non-negative")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError("alphabet names must be unique")
        for name in self.alphabet:
            if not name:
                raise ValueError("alphabet names must be nonempty")
        if len(self.transitions) != self.state_count:
            raise ValueError("transition table must have one row per state")
        for row in self.transitions:
            if len(row) != len(self.alphabet):
                raise ValueError("transition row width must match alphabet size")
            for target in row:
                if target is not None and not 0 <= target < self.state_count:
                    raise ValueError(f"transition target {target} out of range")

    @classmethod
    def from_map(
        cls,
        state_count: int,
        alphabet: Iterable[str],
        delta: Mapping[tuple[int, str], int],
    ) -> "PartialDfa":
        """Build from a ``{(state, letter_name): target}`` mapping."""
        letters = tuple(alphabet)
        index = {name: i for i, name in enumerate(letters)}
        rows: list[list[Optional[int]]] = [
            [None] * len(letters) for _ in range(state_count)
        ]
        for (state, name), target in delta.items():
            if not 0 <= state < state_count:
                raise ValueError(f"state {state} out of range")
            if name not in index:
                raise ValueError(f"unknown letter {name!r}")
            rows[state][index[name]] = target
        return cls(state_count, letters, tuple(tuple(row) for row in rows))

    @property
    def n(self) -> int:
        return self.state_count

    @property
    def letter_count(self) -> int:
        return len(self.alphabet)

    def letter_index(self, name: str) -> int:
        try:
            return self.alphabet.index(name)
        except ValueError:
            raise ValueError(f"unknown letter {name!r}") from None

    def word_from_names(self, names: Iterable[str]) -> Word:
        return tuple(self.letter_index(name) for name in names)

    def word_names(self, word: Word) -> tuple[str, ...]:
        return tuple(self.alphabet[a] for a in word)

    def step(self, state: int, letter: int) -> Optional[int]:
        """Apply one letter to one state; ``None`` when undefined."""
        if not 0 <= state < self.state_count:
            raise ValueError(f"state {state} out of range")
        if not 0 <= letter < len(self.alphabet):
            raise ValueError(f"letter index {letter} out of range")
        return self.transitions[state][letter]

    def run(self, state: int, word: Word) -> Optional[int]:
        """Apply a word to one state, ``None`` as soon as a step is undefined."""
        current: Optional[int] = state
        if not 0 <= state < self.state_count:
            raise ValueError(f"state {state} out of range")
        for letter in word:
            if not 0 <= letter < len(self.alphabet):
                raise ValueError(f"letter index {letter} out of range")
            current = self.transitions[current][letter]
            if current is None:
                return None
        return current

    def image_mask(self, mask: int, word: Word) -> int:
        """Image of a bitmask of states under a word (undefined images drop)."""
        for letter in word:
            if not 0 <= letter < len(self.alphabet):
                raise ValueError(f"letter index {letter} out of range")
            mask = self.step_mask(mask, letter)
        return mask

    def step_mask(self, mask: int, letter: int) -> int:
        column = [row[letter] for row in self.transitions]
        new = 0
        while mask:
            low = mask & -mask
            target = column[low.bit_length() - 1]
            if target is not None:
                new |= 1 << target
            mask ^= low
        return new

    def image(self, states: StateSet, word: Word) -> StateSet:
        """The set ``{delta(s, word) : s in states, delta(s, word) defined}``."""
        if states.universe != self.state_count:
            raise ValueError("state set universe does not match automaton")
        return StateSet(self.state_count, self.image_mask(states.mask, word))

    def rank_of_word(self, states: StateSet, word: Word) -> int:
        """Size of the image of ``states`` under ``word``."""
        return len(self.image(states, word))

    def is_complete(self) -> bool:
        return all(target is not None for row in self.transitions for target in row)

    def is_permutation(self) -> bool:
        """True when every letter is a total bijection on the states."""
        for letter in range(len(self.alphabet)):
            seen = set()
            for row in self.transitions:
                target = row[letter]
                if target is None or target in seen:
                    return False
                seen.add(target)
        return True


@dataclass(frozen=True)
class Acceptor:
    """A partial DFA with an initial state and a set of accepting states.

    The canonical empty acceptor (zero states, ``initial is None``) stands
    for the empty language; it is what trimming returns when no useful
    state survives.
    """

    dfa: PartialDfa
    initial: Optional[int]
    accepting: StateSet

    def __post_init__(self):
        n = self.dfa.state_count
        if self.accepting.universe != n:
            raise ValueError("accepting set universe does not match automaton")
        if n == 0:
            if self.initial is not None:
                raise ValueError("empty acceptor cannot have an initial state")
        elif self.initial is None or not 0 <= self.initial < n:
            raise ValueError(f"initial state {self.initial} out of range")

    @classmethod
    def empty(cls, alphabet: Iterable[str] = ()) -> "Acceptor":
        return cls(PartialDfa(0, tuple(alphabet), ()), None, StateSet(0))

    @property
    def is_empty(self) -> bool:
        return self.dfa.state_count == 0

    def accepts(self, word: Word) -> bool:
        if self.is_empty:
            return False
        state = self.dfa.run(self.initial, word)
        return state is not None and state in self.accepting
