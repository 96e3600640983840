"""
Weighted Yankee Swap for binary additive valuations.

All items start with a dummy holder ``POOL``.  Each iteration first drops
every active agent that has no transfer path to the pool, then lets the active
agent with the largest gain ``w_i / (v_i(A_i) + 1)`` pull one item along a
shortest transfer path: each agent on the path takes a liked item from the
next one, and the last takes a liked item from the pool.  Only the initiator's
value changes, so the allocation stays non-redundant (every agent values every
item it holds) and therefore WEF-able.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterator, Sequence

from .core import Allocation, Instance, Solution, derived, is_binary
from .envy_graph import certify

logger = logging.getLogger(__name__)

ALGORITHM = "binary"
POOL = -1


class ClassMismatch(ValueError):
    pass


@dataclass(frozen=True)
class GameState:
    bundles: tuple[frozenset[int], ...]
    pool: frozenset[int]
    active: frozenset[int]
    t: int = 0

    @classmethod
    def initial(cls, instance: Instance) -> GameState:
        return cls(
            bundles=tuple(frozenset() for _ in range(instance.n)),
            pool=frozenset(range(instance.m)),
            active=frozenset(range(instance.n)),
        )

    def holding(self, holder: int) -> frozenset[int]:
        return self.pool if holder == POOL else self.bundles[holder]

    def allocation(self) -> Allocation:
        return Allocation(self.bundles)


def _liked(instance: Instance, agent: int, items) -> list[int]:
    row = instance.valuations[agent]
    return sorted(o for o in items if row[o] == 1)


def transfer_graph(instance: Instance, state: GameState) -> dict[int, list[int]]:
    """Arc ``i -> j`` iff ``j`` (an agent or ``POOL``) holds an item ``i`` likes."""
    holders = [POOL, *range(instance.n)]
    return {
        i: [j for j in holders if j != i and _liked(instance, i, state.holding(j))]
        for i in range(instance.n)
    }


def _distance_to_pool(graph: dict[int, list[int]]) -> dict[int, int]:
    reverse: dict[int, list[int]] = {}
    for i, targets in graph.items():
        for j in targets:
            reverse.setdefault(j, []).append(i)
    dist = {POOL: 0}
    queue = deque([POOL])
    while queue:
        j = queue.popleft()
        for i in reverse.get(j, ()):
            if i not in dist:
                dist[i] = dist[j] + 1
                queue.append(i)
    return dist


def find_transfer_path(instance: Instance, state: GameState, start: int) -> tuple[int, ...] | None:
    """Shortest transfer path from ``start`` to ``POOL``, lexicographically smallest."""
    if start not in state.active:
        raise ValueError(f"agent {start} is no longer in the game")
    graph = transfer_graph(instance, state)
    dist = _distance_to_pool(graph)
    if start not in dist:
        return None
    path = [start]
    while path[-1] != POOL:
        here = path[-1]
        path.append(min(j for j in graph[here] if dist.get(j) == dist[here] - 1))
    return tuple(path)


def execute_transfer(instance: Instance, state: GameState, path: Sequence[int]) -> GameState:
    """Move items along ``path``; each agent takes its lowest-index liked item from the next."""
    if len(path) < 2 or path[-1] != POOL or POOL in path[:-1]:
        raise ValueError(f"transfer path must end at the pool: {tuple(path)}")
    moves = []
    for taker, giver in zip(path, path[1:]):
        liked = _liked(instance, taker, state.holding(giver))
        if not liked:
            raise ValueError(f"agent {taker} likes nothing held by {giver}")
        moves.append((taker, giver, liked[0]))
    bundles = [set(b) for b in state.bundles]
    pool = set(state.pool)
    for taker, giver, item in moves:
        (pool if giver == POOL else bundles[giver]).discard(item)
        bundles[taker].add(item)
    return replace(state, bundles=tuple(frozenset(b) for b in bundles), pool=frozenset(pool))


def prune(instance: Instance, state: GameState) -> GameState:
    """Drop every active agent with no transfer path (one reverse search from the pool)."""
    reachable = _distance_to_pool(transfer_graph(instance, state))
    return replace(state, active=frozenset(i for i in state.active if i in reachable))


def select_agent(instance: Instance, state: GameState) -> int:
    """Largest gain, then largest weight, then lowest index."""

    def key(i):
        gain = instance.weights[i] / (instance.value(i, state.bundles[i]) + 1)
        return gain, instance.weights[i], -i

    return max(state.active, key=key)


def binary_states(instance: Instance) -> Iterator[GameState]:
    """Yield the state at the end of every iteration.

    ``state.active`` is the active set after that iteration's pruning, i.e.
    the agents that still had a transfer path when the iteration started.
    """
    if not is_binary(instance.valuations):
        raise ClassMismatch("binary valuations required")
    state = GameState.initial(instance)
    while state.active:
        state = prune(instance, state)
        if not state.active:
            break
        agent = select_agent(instance, state)
        path = find_transfer_path(instance, state, agent)
        logger.debug("t=%d: agent %d pulls along %s", state.t + 1, agent, path)
        state = replace(execute_transfer(instance, state, path), t=state.t + 1)
        yield state


def allocate_binary(instance: Instance) -> Solution:
    """
    >>> inst = Instance([1, 2], [[1, 1, 1, 1, 1], [1, 1, 1, 1, 0]])
    >>> sol = allocate_binary(inst)
    >>> sol.allocation.bundles, [str(s) for s in sol.subsidies]
    (((4,), (0, 1, 2, 3)), ['1', '0'])
    """
    final = GameState.initial(instance)
    for final in binary_states(instance):
        pass
    bundles = [set(b) for b in final.bundles]
    if final.pool and instance.n:
        # Only items nobody values can be left over.
        bundles[-1] |= final.pool
    return certify(instance, Allocation(bundles), ALGORITHM)


def subsidy_bound(instance: Instance) -> Fraction:
    """``W / w_1 - 1``."""
    d = derived(instance)
    return d.W / min(instance.weights) - 1


def refined_subsidy_bound(instance: Instance) -> Fraction:
    """``max((W - w_1) / w_2, (W - w_2) / w_1)``; a single agent needs nothing."""
    if instance.n < 2:
        return Fraction(0)
    w1, w2 = sorted(instance.weights)[:2]
    W = derived(instance).W
    return max((W - w1) / w2, (W - w2) / w1)
