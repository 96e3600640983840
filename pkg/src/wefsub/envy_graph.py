"""
The weighted envy graph of an allocation.

Arc ``(i, j)`` carries the weighted envy of ``i`` towards ``j``::

    cost[i][j] = v_i(A_j) / w_j - v_i(A_i) / w_i

An allocation can be made weighted-envy-free by non-negative subsidies
exactly when no directed cycle has positive total cost, and the cheapest such
subsidy vector pays agent ``i`` its weight times the heaviest path leaving
``i``.  Both facts are computed here with one Floyd-Warshall pass over exact
rationals.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import Allocation, Instance, Solution

logger = logging.getLogger(__name__)

ZERO = Fraction(0)


class PositiveCycleError(ValueError):
    """The allocation is not WEF-able; ``cycle`` is a positive-cost certificate."""

    def __init__(self, cycle: tuple[int, ...], cost: Fraction):
        self.cycle = cycle
        self.cost = cost
        super().__init__(f"positive-cost cycle {cycle} with cost {cost}")


@dataclass(frozen=True)
class EnvyGraph:
    cost: tuple[tuple[Fraction, ...], ...]

    @property
    def n(self) -> int:
        return len(self.cost)


@dataclass(frozen=True)
class PathLengths:
    """Heaviest path leaving each agent.

    ``witness[i]`` is the lowest-index successor ``j`` with
    ``cost[i][j] + ell[j] == ell[i]``, or ``None`` when the empty path is
    optimal (``ell[i] == 0``).
    """

    ell: tuple[Fraction, ...]
    witness: tuple[int | None, ...]


def build(instance: Instance, allocation: Allocation) -> EnvyGraph:
    """Exact cost matrix of the weighted envy graph.

    >>> from .core import Instance, Allocation
    >>> g = build(Instance([1, 10], [[5, 7], [10, 8]]), Allocation([[0], [1]]))
    >>> g.cost[0][1], g.cost[1][0]
    (Fraction(-43, 10), Fraction(46, 5))
    """
    n, w = instance.n, instance.weights
    values = [[instance.value(i, bundle) for bundle in allocation.bundles] for i in range(n)]
    return EnvyGraph(
        tuple(
            tuple(ZERO if i == j else values[i][j] / w[j] - values[i][i] / w[i] for j in range(n))
            for i in range(n)
        )
    )


def path_cost(graph: EnvyGraph, path: Sequence[int]) -> Fraction:
    """Sum of arc costs along ``path``; a closed path (first == last) is a cycle."""
    path = list(path)
    body = path[:-1] if len(path) > 1 and path[0] == path[-1] else path
    if len(set(body)) != len(body):
        raise ValueError(f"path {tuple(path)} repeats an interior vertex")
    return sum((graph.cost[a][b] for a, b in zip(path, path[1:])), ZERO)


def _first_positive_cycle(graph: EnvyGraph, walk: list[int]) -> tuple[int, ...]:
    # Split a closed walk (walk[0] == walk[-1]) into simple cycles; their costs
    # sum to the walk's cost, so a positive walk contains a positive cycle.
    stack: list[int] = []
    position: dict[int, int] = {}
    for v in walk:
        if v in position:
            start = position[v]
            cycle = stack[start:]
            for u in cycle:
                del position[u]
            del stack[start:]
            if path_cost(graph, cycle + [cycle[0]]) > 0:
                k = cycle.index(min(cycle))
                return tuple(cycle[k:] + cycle[:k])
        position[v] = len(stack)
        stack.append(v)
    raise AssertionError("closed walk with positive cost has no positive cycle")


def _floyd_warshall(graph: EnvyGraph):
    """Max-plus Floyd-Warshall.

    Returns ``(dist, None)`` when there is no positive cycle, otherwise
    ``(None, cycle)``.  Before processing pivot ``k`` every positive cycle
    whose vertices other than one are below ``k`` has already been reported,
    so the stored paths through pivots below ``k`` are simple and a positive
    closed walk ``i -> k -> i`` can be reconstructed from the successor matrix.
    """
    n = graph.n
    dist = [list(row) for row in graph.cost]
    succ = [[j for j in range(n)] for _ in range(n)]
    for k in range(n):
        for i in range(n):
            if i != k and dist[i][k] + dist[k][i] > 0:
                walk = [i]
                while walk[-1] != k:
                    walk.append(succ[walk[-1]][k])
                while walk[-1] != i:
                    walk.append(succ[walk[-1]][i])
                return None, _first_positive_cycle(graph, walk)
        row_k = dist[k]
        for i in range(n):
            d_ik = dist[i][k]
            row_i, succ_i = dist[i], succ[i]
            for j in range(n):
                candidate = d_ik + row_k[j]
                if candidate > row_i[j]:
                    row_i[j] = candidate
                    succ_i[j] = succ_i[k]
    return dist, None


def positive_cycle(graph: EnvyGraph) -> tuple[int, ...] | None:
    """A positive-cost cycle (rotated to start at its lowest agent), or ``None``."""
    return _floyd_warshall(graph)[1]


def is_wefable(graph: EnvyGraph) -> bool:
    return positive_cycle(graph) is None


def longest_paths(graph: EnvyGraph) -> PathLengths:
    dist, cycle = _floyd_warshall(graph)
    if cycle is not None:
        raise PositiveCycleError(cycle, path_cost(graph, cycle + (cycle[0],)))
    n = graph.n
    ell = tuple(max([ZERO, *(dist[i][j] for j in range(n) if j != i)]) for i in range(n))
    witness = []
    for i in range(n):
        if ell[i] == 0:
            witness.append(None)
            continue
        witness.append(next(j for j in range(n) if j != i and graph.cost[i][j] + ell[j] == ell[i]))
    return PathLengths(ell, tuple(witness))


def min_subsidies(instance: Instance, allocation: Allocation) -> tuple[Fraction, ...]:
    """Componentwise-minimal envy-eliminating subsidies ``w_i * ell_i``.

    >>> from .core import Instance, Allocation
    >>> min_subsidies(Instance([2, 3], [[8, 10], [6, 7]]), Allocation([[0], [1]]))
    (Fraction(0, 1), Fraction(2, 1))
    """
    lengths = longest_paths(build(instance, allocation))
    return tuple(w * l for w, l in zip(instance.weights, lengths.ell))


def check_wef(instance: Instance, allocation: Allocation, subsidies: Sequence[Fraction]) -> bool:
    """True iff ``(v_i(A_i) + s_i) / w_i >= (v_i(A_j) + s_j) / w_j`` for all pairs."""
    n, w = instance.n, instance.weights
    for i in range(n):
        own = (instance.value(i, allocation.bundles[i]) + subsidies[i]) / w[i]
        for j in range(n):
            if j != i and (instance.value(i, allocation.bundles[j]) + subsidies[j]) / w[j] > own:
                return False
    return True


def check_wef_xy(instance: Instance, allocation: Allocation, x: Fraction, y: Fraction) -> bool:
    """WEF(x, y): envy vanishes after moving one item of ``A_j`` (scaled by x and y).

    Both sides are monotone in the value of the chosen item, so only the item
    of ``A_j`` that ``i`` values most (or the empty set) needs checking.
    """
    x, y = Fraction(x), Fraction(y)
    n, w = instance.n, instance.weights
    for i in range(n):
        row = instance.valuations[i]
        own = instance.value(i, allocation.bundles[i])
        for j in range(n):
            if j == i:
                continue
            best = max((row[o] for o in allocation.bundles[j]), default=ZERO)
            other = instance.value(i, allocation.bundles[j])
            if (own + y * best) / w[i] < (other - x * best) / w[j]:
                return False
    return True


def certify(instance: Instance, allocation: Allocation, algorithm: str) -> Solution:
    """Attach minimal subsidies and the WEF / WEF(0,1) verdicts to an allocation."""
    subsidies = min_subsidies(instance, allocation)
    solution = Solution(
        allocation=allocation,
        subsidies=subsidies,
        algorithm=algorithm,
        certified_wef=check_wef(instance, allocation, subsidies),
        wef01=check_wef_xy(instance, allocation, 0, 1),
    )
    logger.debug("%s: subsidies %s", algorithm, [str(s) for s in subsidies])
    return solution
