"""
Greedy sequence protocol for identical additive valuations.

Items are handed out in index order; each goes to the agent whose value per
unit of weight would be smallest after receiving it, preferring the larger
weight (higher index, since validated instances sort weights) on ties.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator

from .core import Allocation, Instance, Solution, is_identical
from .envy_graph import certify

ALGORITHM = "identical"


class ClassMismatch(ValueError):
    pass


def identical_steps(instance: Instance) -> Iterator[Allocation]:
    """Yield the partial allocation after each item is assigned."""
    if not is_identical(instance.valuations):
        raise ClassMismatch("identical valuations required")
    n = instance.n
    values = instance.valuations[0] if instance.valuations else ()
    held = [Fraction(0)] * n
    bundles: list[list[int]] = [[] for _ in range(n)]
    for o, v in enumerate(values):
        best_agent, best = 0, None
        for i in range(n):
            ratio = (held[i] + v) / instance.weights[i]
            if best is None or ratio <= best:
                best_agent, best = i, ratio
        held[best_agent] += v
        bundles[best_agent].append(o)
        yield Allocation(bundles)


def allocate_identical(instance: Instance) -> Solution:
    """
    >>> sol = allocate_identical(Instance([1, "7/2"], [[1, 1, 1], [1, 1, 1]]))
    >>> sol.allocation.bundles, [str(s) for s in sol.subsidies]
    (((), (0, 1, 2)), ['6/7', '0'])
    """
    allocation = Allocation.empty(instance.n)
    for allocation in identical_steps(instance):
        pass
    return certify(instance, allocation, ALGORITHM)


def subsidy_bound(instance: Instance) -> Fraction:
    V = max((v for row in instance.valuations for v in row), default=Fraction(0))
    return (instance.n - 1) * V
