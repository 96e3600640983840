"""Weighted envy-free allocations of indivisible items with bounded subsidies."""

from .binary import allocate_binary
from .core import (
    BINARY,
    GENERAL,
    IDENTICAL,
    Allocation,
    Instance,
    InvalidAllocation,
    InvalidInstance,
    Solution,
    derived,
    validate,
)
from .envy_graph import (
    PositiveCycleError,
    build,
    check_wef,
    check_wef_xy,
    is_wefable,
    longest_paths,
    min_subsidies,
    path_cost,
    positive_cycle,
)
from .general import allocate_general
from .identical import allocate_identical
from .pipeline import allocate

__all__ = [
    "BINARY",
    "GENERAL",
    "IDENTICAL",
    "Allocation",
    "Instance",
    "InvalidAllocation",
    "InvalidInstance",
    "PositiveCycleError",
    "Solution",
    "allocate",
    "allocate_binary",
    "allocate_general",
    "allocate_identical",
    "build",
    "check_wef",
    "check_wef_xy",
    "derived",
    "is_wefable",
    "longest_paths",
    "min_subsidies",
    "path_cost",
    "positive_cycle",
    "validate",
]
