"""Seeded random instances for property checks."""

from __future__ import annotations

import random
from fractions import Fraction

from .core import BINARY, GENERAL, IDENTICAL, Allocation, Instance


def random_weights(rng: random.Random, n: int) -> list[Fraction]:
    """Integers in 1..6, or (half the time) k/d with one shared d in {2, 3} and k in 1..6.

    Sharing the denominator keeps the integerized quotas small.
    """
    if rng.random() < 0.5:
        return [Fraction(rng.randint(1, 6)) for _ in range(n)]
    d = rng.choice((2, 3))
    return [Fraction(rng.randint(1, 6), d) for _ in range(n)]


def random_instance(
    rng: random.Random, valuation_class: str = GENERAL, max_agents: int = 5, max_items: int = 8
) -> Instance:
    n = rng.randint(1, max_agents)
    m = rng.randint(0, max_items)
    weights = random_weights(rng, n)
    if valuation_class == GENERAL:
        rows = [[rng.randint(0, 9) for _ in range(m)] for _ in range(n)]
    elif valuation_class == IDENTICAL:
        row = [rng.randint(0, 9) for _ in range(m)]
        rows = [list(row) for _ in range(n)]
    elif valuation_class == BINARY:
        rows = [[rng.randint(0, 1) for _ in range(m)] for _ in range(n)]
    else:
        raise ValueError(f"unknown valuation class {valuation_class!r}")
    return Instance(weights, rows, valuation_class)


def random_allocation(rng: random.Random, n: int, m: int) -> Allocation:
    bundles: list[list[int]] = [[] for _ in range(n)]
    for o in range(m):
        bundles[rng.randrange(n)].append(o)
    return Allocation(bundles)


def random_non_redundant(rng: random.Random, instance: Instance) -> Allocation:
    """Each item goes to a random agent that likes it; items nobody likes stay out."""
    bundles: list[list[int]] = [[] for _ in range(instance.n)]
    for o in range(instance.m):
        fans = [i for i in range(instance.n) if instance.valuations[i][o] == 1]
        if fans:
            bundles[rng.choice(fans)].append(o)
    return Allocation(bundles)
