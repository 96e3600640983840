"""Validate, allocate, and report in the caller's labels."""

from __future__ import annotations

from fractions import Fraction

from . import binary, general, identical
from .core import BINARY, IDENTICAL, Instance, Solution, derived, restore_allocation, restore_vector, validate

ALGORITHMS = {
    "general": general.allocate_general,
    "identical": identical.allocate_identical,
    "binary": binary.allocate_binary,
}


class AlgorithmMismatch(ValueError):
    pass


def resolve(instance: Instance, algorithm: str) -> str:
    if algorithm == "auto":
        return instance.valuation_class
    if algorithm not in ALGORITHMS:
        raise AlgorithmMismatch(f"unknown algorithm {algorithm!r}")
    if algorithm != "general" and instance.valuation_class != algorithm:
        raise AlgorithmMismatch(
            f"algorithm {algorithm!r} needs {algorithm} valuations, instance is {instance.valuation_class}"
        )
    return algorithm


def run(working: Instance, algorithm: str) -> Solution:
    """Run an allocator on an already validated instance (working labels)."""
    return ALGORITHMS[resolve(working, algorithm)](working)


def allocate(instance: Instance, algorithm: str = "auto") -> Solution:
    """Validate ``instance``, run an allocator and map the result back.

    >>> sol = allocate(Instance([2, 1], [[1, 1, 1, 1, 0], [1, 1, 1, 1, 1]], "binary"))
    >>> sol.allocation.bundles, [str(s) for s in sol.subsidies]
    (((0, 1, 2, 3), (4,)), ['0', '1'])
    """
    working = validate(instance)
    solution = run(working, algorithm)
    return Solution(
        allocation=restore_allocation(working, solution.allocation),
        subsidies=restore_vector(working, solution.subsidies),
        algorithm=solution.algorithm,
        certified_wef=solution.certified_wef,
        wef01=solution.wef01,
    )


def bounds(working: Instance) -> dict[str, Fraction]:
    """Subsidy bounds that apply to a validated instance, keyed by name."""
    d = derived(working)
    w1 = min(working.weights)
    out = {
        "general": general.subsidy_bound(working),
        "general_lower": (d.W / w1 - 1) * d.V,
    }
    if working.valuation_class == IDENTICAL:
        out["identical"] = identical.subsidy_bound(working)
    if working.valuation_class == BINARY:
        out["binary"] = binary.subsidy_bound(working)
        out["binary_refined"] = binary.refined_subsidy_bound(working)
    return out
