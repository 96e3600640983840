"""
Minimum-cost maximum flow by successive shortest augmenting paths.

Costs are exact rationals and may be negative (the matching networks use
``-value`` as the arc cost).  The first shortest-path search is label
correcting (Bellman-Ford); later searches run Dijkstra on reduced costs using
node potentials.  Among all shortest augmenting paths the one with the
lexicographically smallest node sequence is used, so results only depend on
the network, never on heap or dict ordering.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction


class MalformedNetwork(ValueError):
    pass


@dataclass(frozen=True)
class Arc:
    tail: int
    head: int
    capacity: int
    cost: Fraction = Fraction(0)


@dataclass
class FlowNetwork:
    num_nodes: int
    source: int
    sink: int
    arcs: list[Arc] = field(default_factory=list)

    def add_arc(self, tail: int, head: int, capacity: int, cost: Fraction | int = 0) -> int:
        self.arcs.append(Arc(tail, head, capacity, Fraction(cost)))
        return len(self.arcs) - 1

    def check(self) -> None:
        nodes = range(self.num_nodes)
        if self.source not in nodes or self.sink not in nodes:
            raise MalformedNetwork("source or sink index out of range")
        if self.source == self.sink:
            raise MalformedNetwork("source and sink coincide")
        for a in self.arcs:
            if a.tail not in nodes or a.head not in nodes:
                raise MalformedNetwork(f"arc {a} has an endpoint out of range")
            if a.tail == a.head:
                raise MalformedNetwork(f"self-loop at node {a.tail}")
            if not isinstance(a.capacity, int) or a.capacity < 0:
                raise MalformedNetwork(f"arc {a} needs a non-negative integer capacity")


@dataclass(frozen=True)
class FlowResult:
    value: int
    flows: tuple[int, ...]
    cost: Fraction


class _Residual:
    # Edge 2a is arc a forward, edge 2a+1 its reverse.
    def __init__(self, network: FlowNetwork):
        self.n = network.num_nodes
        self.head: list[int] = []
        self.cap: list[int] = []
        self.cost: list[Fraction] = []
        self.out: list[list[int]] = [[] for _ in range(self.n)]
        for idx, a in enumerate(network.arcs):
            self.head += [a.head, a.tail]
            self.cap += [a.capacity, 0]
            self.cost += [a.cost, -a.cost]
            self.out[a.tail].append(2 * idx)
            self.out[a.head].append(2 * idx + 1)
        for edges in self.out:
            edges.sort(key=lambda e: (self.head[e], e))

    def live(self, u: int):
        for e in self.out[u]:
            if self.cap[e] > 0:
                yield e, self.head[e]


def _bellman_ford(res: _Residual, source: int, reduced) -> list[Fraction | None]:
    dist: list[Fraction | None] = [None] * res.n
    dist[source] = Fraction(0)
    queue = deque([source])
    queued = [False] * res.n
    queued[source] = True
    rounds = [0] * res.n
    while queue:
        u = queue.popleft()
        queued[u] = False
        for e, v in res.live(u):
            d = dist[u] + reduced(u, e)
            if dist[v] is None or d < dist[v]:
                dist[v] = d
                if not queued[v]:
                    rounds[v] += 1
                    if rounds[v] > res.n:
                        raise MalformedNetwork("negative-cost cycle reachable from the source")
                    queued[v] = True
                    queue.append(v)
    return dist


def _dijkstra(res: _Residual, source: int, reduced) -> list[Fraction | None]:
    dist: list[Fraction | None] = [None] * res.n
    dist[source] = Fraction(0)
    heap = [(Fraction(0), source)]
    done = [False] * res.n
    while heap:
        d, u = heapq.heappop(heap)
        if done[u]:
            continue
        done[u] = True
        for e, v in res.live(u):
            nd = d + reduced(u, e)
            if dist[v] is None or nd < dist[v]:
                dist[v] = nd
                heapq.heappush(heap, (nd, v))
    return dist


def _lex_smallest_path(res, source, sink, dist, reduced) -> list[int]:
    """Edges of the lexicographically smallest simple shortest path."""

    tight_out = [
        [(e, v) for e, v in res.live(u) if dist[v] is not None and dist[u] + reduced(u, e) == dist[v]]
        if dist[u] is not None
        else []
        for u in range(res.n)
    ]

    def reaches_sink(start, blocked):
        seen = set(blocked) | {start}
        stack = [start]
        while stack:
            u = stack.pop()
            if u == sink:
                return True
            for _, v in tight_out[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return False

    path, visited, u = [], {source}, source
    while u != sink:
        for e, v in tight_out[u]:
            if v not in visited and reaches_sink(v, visited):
                path.append(e)
                visited.add(v)
                u = v
                break
        else:
            raise AssertionError("no tight path although the sink is reachable")
    return path


def min_cost_max_flow(network: FlowNetwork) -> FlowResult:
    """Integral maximum flow of minimum cost.

    >>> net = FlowNetwork(6, 0, 5)
    >>> for agent in (1, 2):
    ...     _ = net.add_arc(0, agent, 1)
    >>> for agent, values in ((1, (5, 7)), (2, (10, 8))):
    ...     for item, v in zip((3, 4), values):
    ...         _ = net.add_arc(agent, item, 1, -v)
    >>> for item in (3, 4):
    ...     _ = net.add_arc(item, 5, 1)
    >>> result = min_cost_max_flow(net)
    >>> result.value, result.cost
    (2, Fraction(-17, 1))
    """
    network.check()
    res = _Residual(network)
    s, t = network.source, network.sink
    potential = [Fraction(0)] * res.n

    def reduced(u, e):
        return res.cost[e] + potential[u] - potential[res.head[e]]

    value, first = 0, True
    while True:
        dist = (_bellman_ford if first else _dijkstra)(res, s, reduced)
        first = False
        if dist[t] is None:
            break
        path = _lex_smallest_path(res, s, t, dist, reduced)
        push = min(res.cap[e] for e in path)
        for e in path:
            res.cap[e] -= push
            res.cap[e ^ 1] += push
        value += push
        for v in range(res.n):
            if dist[v] is not None:
                potential[v] += dist[v]

    flows = tuple(res.cap[2 * i + 1] for i in range(len(network.arcs)))
    cost = sum((f * a.cost for f, a in zip(flows, network.arcs)), Fraction(0))
    return FlowResult(value, flows, cost)
