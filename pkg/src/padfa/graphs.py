"""Graph utilities over the transition structure of a partial DFA.

Covers reachability, strongly connected components with their condensation,
trimming of acceptors, and the pair automaton (the restriction of the power
automaton to subsets of size at most two) that drives the polynomial
minimum-rank search.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from .core import Acceptor, PartialDfa, StateSet


def _successors(dfa: PartialDfa) -> list[set[int]]:
    out: list[set[int]] = [set() for _ in range(dfa.state_count)]
    for state, row in enumerate(dfa.transitions):
        for target in row:
            if target is not None:
                out[state].add(target)
    return out


def _predecessors(dfa: PartialDfa) -> list[set[int]]:
    inn: list[set[int]] = [set() for _ in range(dfa.state_count)]
    for state, row in enumerate(dfa.transitions):
        for target in row:
            if target is not None:
                inn[target].add(state)
    return inn


def _closure(adjacency: list[set[int]], starts: Iterable[int]) -> set[int]:
    seen = set(starts)
    queue = deque(seen)
    while queue:
        node = queue.popleft()
        for nxt in adjacency[node]:
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def reachable_from(dfa: PartialDfa, starts: Iterable[int]) -> set[int]:
    """States reachable from ``starts`` along defined transitions."""
    return _closure(_successors(dfa), starts)


def coreachable_to(dfa: PartialDfa, targets: Iterable[int]) -> set[int]:
    """States from which some state in ``targets`` is reachable."""
    return _closure(_predecessors(dfa), targets)


def is_strongly_connected(dfa: PartialDfa) -> bool:
    """True iff every state reaches every other along defined transitions."""
    if dfa.state_count == 0:
        raise ValueError("strong connectivity is undefined for the empty automaton")
    n = dfa.state_count
    return (
        len(reachable_from(dfa, [0])) == n and len(coreachable_to(dfa, [0])) == n
    )


@dataclass(frozen=True)
class ComponentGraph:
    """SCC decomposition plus the condensation DAG.

    Components are listed in a topological order of the condensation
    (sources first) and identified by their index in ``components``.
    """

    components: tuple[tuple[int, ...], ...]
    component_of: tuple[int, ...]
    edges: frozenset[tuple[int, int]]

    def sources(self) -> tuple[int, ...]:
        """Component indices with no incoming condensation edge."""
        has_in = {dst for _, dst in self.edges}
        return tuple(i for i in range(len(self.components)) if i not in has_in)


def scc(dfa: PartialDfa) -> ComponentGraph:
    """Strongly connected components of the transition graph (iterative Tarjan)."""
    n = dfa.state_count
    adjacency = [sorted(s) for s in _successors(dfa)]
    index: list[Optional[int]] = [None] * n
    lowlink = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    counter = 0
    raw_components: list[list[int]] = []

    for root in range(n):
        if index[root] is not None:
            continue
        work: list[tuple[int, int]] = [(root, 0)]
        while work:
            node, child_pos = work.pop()
            if child_pos == 0:
                index[node] = lowlink[node] = counter
                counter += 1
                stack.append(node)
                on_stack[node] = True
            advanced = False
            for pos in range(child_pos, len(adjacency[node])):
                nxt = adjacency[node][pos]
                if index[nxt] is None:
                    work.append((node, pos + 1))
                    work.append((nxt, 0))
                    advanced = True
                    break
                if on_stack[nxt]:
                    lowlink[node] = min(lowlink[node], index[nxt])
            if advanced:
                continue
            if lowlink[node] == index[node]:
                component = []
                while True:
                    member = stack.pop()
                    on_stack[member] = False
                    component.append(member)
                    if member == node:
                        break
                raw_components.append(sorted(component))
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[node])

    # Tarjan emits components in reverse topological order.
    ordered = list(reversed(raw_components))
    component_of = [0] * n
    for i, component in enumerate(ordered):
        for member in component:
            component_of[member] = i
    edges = set()
    for state, row in enumerate(dfa.transitions):
        for target in row:
            if target is not None and component_of[state] != component_of[target]:
                edges.add((component_of[state], component_of[target]))
    return ComponentGraph(
        tuple(tuple(c) for c in ordered), tuple(component_of), frozenset(edges)
    )


def trim(acceptor: Acceptor) -> tuple[Acceptor, dict[int, int]]:
    """Restrict to states both reachable from the initial state and
    co-reachable to an accepting state.

    Indices are re-packed in ascending order; the old-to-new map is returned
    alongside.  When the initial state itself is not useful the canonical
    empty acceptor is returned (callers must handle it).
    """
    if acceptor.is_empty:
        return acceptor, {}
    dfa = acceptor.dfa
    useful = sorted(
        reachable_from(dfa, [acceptor.initial])
        & coreachable_to(dfa, list(acceptor.accepting))
    )
    if acceptor.initial not in useful:
        return Acceptor.empty(dfa.alphabet), {}
    old_to_new = {old: new for new, old in enumerate(useful)}
    rows = []
    for old in useful:
        row = []
        for target in dfa.transitions[old]:
            row.append(old_to_new.get(target) if target is not None else None)
        rows.append(tuple(row))
    trimmed = PartialDfa(len(useful), dfa.alphabet, tuple(rows))
    accepting = StateSet.from_iterable(
        len(useful), (old_to_new[s] for s in acceptor.accepting if s in old_to_new)
    )
    return Acceptor(trimmed, old_to_new[acceptor.initial], accepting), old_to_new


@dataclass(frozen=True)
class PairNode:
    """Node of the pair automaton: a 2-set of states, a singleton, or dead."""

    states: tuple[int, ...]

    @property
    def kind(self) -> str:
        return ("dead", "singleton", "pair")[len(self.states)]


@dataclass(frozen=True)
class PairAutomaton:
    """Power automaton restricted to subsets of size at most two.

    Node 0 is the absorbing dead node, nodes ``1..n`` are the singletons,
    and the remaining nodes are the unordered pairs.  ``step[node][letter]``
    is total: a pair moves to the (pair or singleton) image of its two
    states, to the singleton of the surviving state when exactly one image
    is defined, and to dead when neither is.
    """

    state_count: int
    nodes: tuple[PairNode, ...]
    step: tuple[tuple[int, ...], ...]

    DEAD = 0

    def singleton_index(self, state: int) -> int:
        return 1 + state

    def pair_index(self, p: int, q: int) -> int:
        if p == q:
            raise ValueError("a pair needs two distinct states")
        p, q = min(p, q), max(p, q)
        n = self.state_count
        # Pairs are laid out after the singletons, ordered by (p, q).
        offset = p * (2 * n - p - 1) // 2 + (q - p - 1)
        return 1 + n + offset

    def distances_to_singleton(self) -> list[Optional[int]]:
        """Shortest word length from each node to any singleton (None if none).

        Backward breadth-first search from the singleton nodes; singletons
        themselves are at distance 0, the dead node is unreachable.
        """
        preds: list[list[tuple[int, int]]] = [[] for _ in self.nodes]
        for node, row in enumerate(self.step):
            for letter, target in enumerate(row):
                preds[target].append((node, letter))
        dist: list[Optional[int]] = [None] * len(self.nodes)
        queue: deque[int] = deque()
        for state in range(self.state_count):
            idx = self.singleton_index(state)
            dist[idx] = 0
            queue.append(idx)
        while queue:
            node = queue.popleft()
            for pred, _ in preds[node]:
                if dist[pred] is None and pred != self.DEAD:
                    dist[pred] = dist[node] + 1
                    queue.append(pred)
        return dist

    def merge_policy(self) -> tuple[list[Optional[int]], list[Optional[int]]]:
        """Distances plus, per node, the smallest letter moving one step
        closer to a singleton."""
        dist = self.distances_to_singleton()
        policy: list[Optional[int]] = [None] * len(self.nodes)
        for node, row in enumerate(self.step):
            d = dist[node]
            if d is None or d == 0:
                continue
            for letter, target in enumerate(row):
                if dist[target] is not None and dist[target] == d - 1:
                    policy[node] = letter
                    break
        return dist, policy


def pair_automaton(dfa: PartialDfa) -> PairAutomaton:
    """Build the size-at-most-two power automaton of ``dfa``."""
    n = dfa.state_count
    nodes: list[PairNode] = [PairNode(())]
    nodes.extend(PairNode((s,)) for s in range(n))
    pair_list = [(p, q) for p in range(n) for q in range(p + 1, n)]
    nodes.extend(PairNode(pq) for pq in pair_list)

    auto = PairAutomaton(n, tuple(nodes), ())
    letters = range(dfa.letter_count)
    rows: list[tuple[int, ...]] = [tuple(PairAutomaton.DEAD for _ in letters)]
    for s in range(n):
        row = []
        for a in letters:
            target = dfa.transitions[s][a]
            row.append(
                PairAutomaton.DEAD if target is None else auto.singleton_index(target)
            )
        rows.append(tuple(row))
    for p, q in pair_list:
        row = []
        for a in letters:
            tp = dfa.transitions[p][a]
            tq = dfa.transitions[q][a]
            if tp is None and tq is None:
                row.append(PairAutomaton.DEAD)
            elif tp is None:
                row.append(auto.singleton_index(tq))
            elif tq is None:
                row.append(auto.singleton_index(tp))
            elif tp == tq:
                row.append(auto.singleton_index(tp))
            else:
                row.append(auto.pair_index(tp, tq))
        rows.append(tuple(row))
    return PairAutomaton(n, tuple(nodes), tuple(rows))
