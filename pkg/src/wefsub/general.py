"""
Iterated one-to-many maximum-value matching for general additive valuations.

Weights are integerized (scaled by the lcm of their denominators, then divided
by their gcd) into quotas ``q_i``.  Each round gives agent ``i`` exactly
``q_i`` of the remaining items, topping the round up with zero-valued dummy
items when fewer than ``sum(q)`` real items are left, and picks the matching of
maximum total value via a min-cost flow.  Every round's matching, and hence
the union of all rounds, is WEF-able; each agent needs a subsidy of at most
``q_i * V``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .core import Allocation, Instance, Solution, derived
from .envy_graph import certify
from .flow import FlowNetwork, min_cost_max_flow

logger = logging.getLogger(__name__)

ALGORITHM = "general"


@dataclass(frozen=True)
class RoundPlan:
    index: int
    remaining: tuple[int, ...]
    quotas: tuple[int, ...]

    @property
    def dummies(self) -> int:
        return max(0, sum(self.quotas) - len(self.remaining))


def round_network(instance: Instance, plan: RoundPlan) -> tuple[FlowNetwork, dict[int, tuple[int, int]]]:
    """Source -> agents (cap q_i) -> items/dummies (cost -v) -> sink.

    Node order is source, agents, real items, dummies, sink; the flow solver
    prefers low node indices on ties, so real items win over dummies.
    Returns the network and a map from agent->item arc index to (agent, item).
    """
    n = instance.n
    items = plan.remaining
    first_item = n + 1
    first_dummy = first_item + len(items)
    sink = first_dummy + plan.dummies
    net = FlowNetwork(sink + 1, 0, sink)
    for i, q in enumerate(plan.quotas):
        net.add_arc(0, 1 + i, q)
    assignment_arcs: dict[int, tuple[int, int]] = {}
    for i in range(n):
        row = instance.valuations[i]
        for k, o in enumerate(items):
            assignment_arcs[net.add_arc(1 + i, first_item + k, 1, -row[o])] = (i, o)
        for k in range(plan.dummies):
            net.add_arc(1 + i, first_dummy + k, 1)
    for node in range(first_item, sink):
        net.add_arc(node, sink, 1)
    return net, assignment_arcs


def match_round(instance: Instance, plan: RoundPlan) -> Allocation:
    net, assignment_arcs = round_network(instance, plan)
    result = min_cost_max_flow(net)
    bundles: list[list[int]] = [[] for _ in range(instance.n)]
    for arc, (i, o) in assignment_arcs.items():
        if result.flows[arc]:
            bundles[i].append(o)
    return Allocation(bundles)


def general_rounds(instance: Instance) -> Iterator[Allocation]:
    """Yield the matching computed in each round (not the running union)."""
    quotas = derived(instance).reduced_weights
    remaining = tuple(range(instance.m))
    index = 0
    while remaining:
        index += 1
        matching = match_round(instance, RoundPlan(index, remaining, quotas))
        taken = {o for bundle in matching.bundles for o in bundle}
        logger.debug("round %d: %s", index, matching.bundles)
        remaining = tuple(o for o in remaining if o not in taken)
        yield matching


def union(allocations: Sequence[Allocation], n: int) -> Allocation:
    bundles: list[list[int]] = [[] for _ in range(n)]
    for allocation in allocations:
        for i, bundle in enumerate(allocation.bundles):
            bundles[i].extend(bundle)
    return Allocation(bundles)


def allocate_general(instance: Instance) -> Solution:
    """WEF-able allocation for additive valuations and rational weights.

    >>> from .core import Instance
    >>> sol = allocate_general(Instance([1, 10], [[5, 7], [10, 8]]))
    >>> sol.allocation.bundles, [str(s) for s in sol.subsidies]
    (((), (0, 1)), ['6/5', '0'])
    """
    allocation = union(list(general_rounds(instance)), instance.n)
    return certify(instance, allocation, ALGORITHM)


def subsidy_bound(instance: Instance) -> Fraction:
    """Guaranteed total: ``(sum(q) - q_min) * V`` in reduced integer weights."""
    d = derived(instance)
    return (d.reduced_total - min(d.reduced_weights)) * d.V
