"""
Brute-force ground truth for small instances.

Nothing here shares code paths with the algorithms it checks: envy-graph
path lengths are found by enumerating simple paths instead of Floyd-Warshall,
matchings and flows by exhaustive enumeration instead of shortest paths.
Minimum total subsidy over all allocations is NP-hard in general, so
:func:`enumerate_min_subsidy` refuses instances with more than a million
allocations.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterator, Sequence

from .core import BINARY, GENERAL, IDENTICAL, Allocation, Instance, parse_rational
from .envy_graph import EnvyGraph, build
from .flow import FlowNetwork

MAX_ALLOCATIONS = 10**6
DEFAULT_EPS = Fraction(1, 100)
FAMILIES = ("uniform", "single-item", "surplus", "two-fans", "favoured")


class InstanceTooLarge(ValueError):
    pass


# --- envy graph ---------------------------------------------------------------


def simple_paths(n: int, start: int) -> Iterator[tuple[int, ...]]:
    stack = [(start,)]
    while stack:
        path = stack.pop()
        yield path
        for v in range(n):
            if v not in path:
                stack.append(path + (v,))


def _cost(graph: EnvyGraph, path: Sequence[int]) -> Fraction:
    return sum((graph.cost[a][b] for a, b in zip(path, path[1:])), Fraction(0))


def brute_force_path_lengths(graph: EnvyGraph) -> tuple[Fraction, ...]:
    """Heaviest simple path from each agent, by enumeration (includes the empty path)."""
    return tuple(max(_cost(graph, p) for p in simple_paths(graph.n, i)) for i in range(graph.n))


def brute_force_max_cycle(graph: EnvyGraph) -> Fraction | None:
    """Largest simple-cycle cost, or ``None`` for fewer than two agents."""
    best = None
    for i in range(graph.n):
        for path in simple_paths(graph.n, i):
            if len(path) > 1 and path[0] == min(path):
                c = _cost(graph, path + (i,))
                best = c if best is None else max(best, c)
    return best


def brute_force_subsidies(instance: Instance, allocation: Allocation) -> tuple[Fraction, ...]:
    graph = build(instance, allocation)
    return tuple(w * l for w, l in zip(instance.weights, brute_force_path_lengths(graph)))


# --- allocations --------------------------------------------------------------


def _guard(n: int, m: int) -> None:
    if n**m > MAX_ALLOCATIONS:
        raise InstanceTooLarge(f"{n}^{m} allocations exceed the limit of {MAX_ALLOCATIONS}")


def all_allocations(n: int, m: int) -> Iterator[Allocation]:
    """Every complete allocation; item 0 is the most significant digit."""
    for owners in itertools.product(range(n), repeat=m):
        bundles: list[list[int]] = [[] for _ in range(n)]
        for o, i in enumerate(owners):
            bundles[i].append(o)
        yield Allocation(bundles)


def enumerate_min_subsidy(instance: Instance) -> tuple[Fraction, Allocation]:
    """Minimum total subsidy over all WEF-able allocations, with the first optimal witness."""
    _guard(instance.n, instance.m)
    best: tuple[Fraction, Allocation] | None = None
    for allocation in all_allocations(instance.n, instance.m):
        graph = build(instance, allocation)
        cycle = brute_force_max_cycle(graph)
        if cycle is not None and cycle > 0:
            continue
        total = sum(
            (w * l for w, l in zip(instance.weights, brute_force_path_lengths(graph))), Fraction(0)
        )
        if best is None or total < best[0]:
            best = (total, allocation)
    assert best is not None, "some allocation is always WEF-able"
    return best


def enumerate_permutations(
    instance: Instance, bundles: Sequence[Sequence[int]]
) -> list[tuple[tuple[int, ...], bool]]:
    """WEF-ability of every reassignment ``A_i = bundles[perm[i]]``."""
    if instance.n > 8:
        raise InstanceTooLarge("at most 8 agents")
    out = []
    for perm in itertools.permutations(range(instance.n)):
        graph = build(instance, Allocation([bundles[p] for p in perm]))
        cycle = brute_force_max_cycle(graph)
        out.append((perm, cycle is None or cycle <= 0))
    return out


# --- matchings and flows ------------------------------------------------------


def best_quota_matching(instance: Instance, items: Sequence[int], quotas: Sequence[int]) -> Fraction:
    """Largest total value when agent ``i`` takes exactly ``quotas[i]`` items.

    Missing items are made up with zero-valued dummies, so real items may also
    be left out when there are more of them than quota slots.
    """
    n, total = instance.n, sum(quotas)
    best = None
    for owners in itertools.product(range(-1, n), repeat=len(items)):
        counts = [owners.count(i) for i in range(n)]
        assigned = sum(counts)
        if any(c > q for c, q in zip(counts, quotas)) or assigned != min(total, len(items)):
            continue
        value = sum(
            (instance.valuations[i][o] for o, i in zip(items, owners) if i >= 0), Fraction(0)
        )
        best = value if best is None else max(best, value)
    return best if best is not None else Fraction(0)


def brute_force_flow(network: FlowNetwork) -> tuple[int, Fraction]:
    """(maximum flow value, minimum cost among maximum flows) by enumeration."""
    best_value, best_cost = -1, None
    ranges = [range(a.capacity + 1) for a in network.arcs]
    for flows in itertools.product(*ranges):
        balance = [0] * network.num_nodes
        for f, a in zip(flows, network.arcs):
            balance[a.tail] -= f
            balance[a.head] += f
        if any(b for v, b in enumerate(balance) if v not in (network.source, network.sink)):
            continue
        value = balance[network.sink]
        cost = sum((f * a.cost for f, a in zip(flows, network.arcs)), Fraction(0))
        if value > best_value or (value == best_value and cost < best_cost):
            best_value, best_cost = value, cost
    return best_value, best_cost


# --- tight constructions ------------------------------------------------------


def generate_tight(
    family: str,
    weights: Sequence[Fraction | int | str],
    *,
    items: int = 1,
    value: Fraction | int = 1,
    eps: Fraction = DEFAULT_EPS,
    agent: int = 0,
) -> Instance:
    """Instances behind the worst-case constructions (weights are sorted ascending).

    ``uniform``
        ``items`` items every agent values at ``value``.
    ``single-item``
        one item worth ``value`` to the lightest agent and ``value - eps`` to the rest.
    ``surplus``
        integer weights, ``1 + sum(w_i - 1)`` items all worth ``value``.
    ``two-fans``
        one item the two lightest agents value at 1 (binary).
    ``favoured``
        two items worth ``value`` to ``agent`` and ``value - eps`` to everyone else.

    >>> generate_tight("two-fans", [3, 1, 2]).valuations
    ((Fraction(1, 1),), (Fraction(1, 1),), (Fraction(0, 1),))
    """
    w = sorted(parse_rational(x) for x in weights)
    n, V, eps = len(w), Fraction(value), Fraction(eps)
    if n == 0 or any(x <= 0 for x in w):
        raise ValueError("need at least one positive weight")
    if V <= 0:
        raise ValueError("value must be positive")
    if family == "uniform":
        if items < 0:
            raise ValueError("items must be non-negative")
        return Instance(w, [[V] * items for _ in range(n)], IDENTICAL)
    if family == "single-item":
        if n < 2 or not 0 < eps < V:
            raise ValueError("single-item needs n >= 2 and 0 < eps < value")
        return Instance(w, [[V]] + [[V - eps] for _ in range(n - 1)], GENERAL)
    if family == "surplus":
        if any(x.denominator != 1 for x in w):
            raise ValueError("surplus needs integer weights")
        m = 1 + sum(int(x) - 1 for x in w)
        return Instance(w, [[V] * m for _ in range(n)], IDENTICAL)
    if family == "two-fans":
        if n < 2:
            raise ValueError("two-fans needs n >= 2")
        return Instance(w, [[1], [1]] + [[0] for _ in range(n - 2)], BINARY)
    if family == "favoured":
        if not 0 <= agent < n - 1 or w[agent] < 2 or not 0 < eps < V:
            raise ValueError("favoured needs 0 <= agent < n-1, weight >= 2 and 0 < eps < value")
        rows = [[V, V] if i == agent else [V - eps, V - eps] for i in range(n)]
        return Instance(w, rows, GENERAL)
    raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


def worst_allocation(instance: Instance) -> Allocation:
    """Everything to the lightest agent (the allocation the uniform bound is tight on)."""
    lightest = min(range(instance.n), key=lambda i: instance.weights[i])
    return Allocation([list(range(instance.m)) if i == lightest else [] for i in range(instance.n)])


def tight_value(family: str, instance: Instance, *, eps: Fraction = DEFAULT_EPS, agent: int = 0) -> Fraction:
    """The total subsidy each construction pins down exactly.

    uniform: minimal subsidies of :func:`worst_allocation`; single-item and two-fans:
    the optimum over all allocations; surplus: the identical-valuation greedy's
    total (also the optimum); favoured: the general algorithm's total.
    """
    w = sorted(instance.weights)
    W, V = sum(w, Fraction(0)), max(v for row in instance.valuations for v in row)
    if family == "uniform":
        return (W / w[0] - 1) * instance.m * V
    if family == "single-item":
        return (W - w[0]) * (V - eps) / w[0]
    if family == "surplus":
        return (instance.n - 1) * V
    if family == "two-fans":
        return W / w[1] - 1
    if family == "favoured":
        wi = instance.weights[agent]
        return (W - wi) * 2 * (V - eps) / wi
    raise ValueError(f"unknown family {family!r}")
