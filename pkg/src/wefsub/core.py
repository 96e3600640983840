"""
Domain types for weighted fair division with subsidies.

All numbers are exact rationals (:class:`fractions.Fraction`); nothing in the
package ever touches a float.  Agents and items are 0-based indices.

An :class:`Instance` as read from disk keeps the caller's agent order.
:func:`validate` returns the canonical working form used by the allocators:
agents sorted by non-decreasing weight and items nobody values removed.  The
label fields on the validated instance let :func:`restore_allocation` and
:func:`restore_vector` map results back to the caller's labels.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Sequence

GENERAL = "general"
IDENTICAL = "identical"
BINARY = "binary"
VALUATION_CLASSES = (GENERAL, IDENTICAL, BINARY)

_RATIONAL = re.compile(r"[+-]?\d+(?:/\d+)?")


class InvalidInstance(ValueError):
    """Raised by :func:`validate`; ``errors`` lists every problem found."""

    def __init__(self, errors: Iterable[str]):
        self.errors = list(errors)
        super().__init__("; ".join(self.errors))


class InvalidAllocation(ValueError):
    pass


def parse_rational(value: Any) -> Fraction:
    """Parse an exact rational from an int or a ``"p/q"`` / ``"p"`` string.

    >>> parse_rational("7/2")
    Fraction(7, 2)
    >>> parse_rational("4/6")
    Fraction(2, 3)
    >>> parse_rational(3)
    Fraction(3, 1)
    >>> parse_rational("0.5")
    Traceback (most recent call last):
    ...
    ValueError: not an exact rational: '0.5'
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str) and _RATIONAL.fullmatch(value.strip()):
        try:
            return Fraction(value.strip())
        except ZeroDivisionError:
            pass
    raise ValueError(f"not an exact rational: {value!r}")


def format_rational(value: Fraction | int) -> str:
    return str(Fraction(value))


@dataclass(frozen=True)
class Instance:
    weights: tuple[Fraction, ...]
    valuations: tuple[tuple[Fraction, ...], ...]
    valuation_class: str = GENERAL
    # Populated by validate(); None means "labels are the caller's own".
    agent_labels: tuple[int, ...] | None = None
    item_labels: tuple[int, ...] | None = None
    zero_items: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(parse_rational(w) for w in self.weights))
        object.__setattr__(
            self,
            "valuations",
            tuple(tuple(parse_rational(v) for v in row) for row in self.valuations),
        )

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def m(self) -> int:
        return len(self.valuations[0]) if self.valuations else 0

    def value(self, agent: int, items: Iterable[int]) -> Fraction:
        row = self.valuations[agent]
        return sum((row[o] for o in items), Fraction(0))

    @property
    def original_m(self) -> int:
        if self.item_labels is None:
            return self.m
        return len(self.item_labels) + len(self.zero_items)


@dataclass(frozen=True)
class DerivedScalars:
    V: Fraction
    W: Fraction
    lcm_denominator: int
    gcd: int
    reduced_weights: tuple[int, ...]

    @property
    def reduced_total(self) -> int:
        return sum(self.reduced_weights)


@dataclass(frozen=True)
class Allocation:
    """Bundles of item indices, one per agent."""

    bundles: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "bundles", tuple(tuple(sorted(b)) for b in self.bundles))

    @classmethod
    def empty(cls, n: int) -> Allocation:
        return cls(tuple(() for _ in range(n)))

    @property
    def n(self) -> int:
        return len(self.bundles)

    def owner(self) -> dict[int, int]:
        return {o: i for i, bundle in enumerate(self.bundles) for o in bundle}

    def to_lists(self) -> list[list[int]]:
        return [list(b) for b in self.bundles]


@dataclass(frozen=True)
class Solution:
    allocation: Allocation
    subsidies: tuple[Fraction, ...]
    algorithm: str
    certified_wef: bool
    wef01: bool

    @property
    def total_subsidy(self) -> Fraction:
        return sum(self.subsidies, Fraction(0))


def is_identical(valuations: Sequence[Sequence[Fraction]]) -> bool:
    return all(row == valuations[0] for row in valuations)


def is_binary(valuations: Sequence[Sequence[Fraction]]) -> bool:
    return all(v in (0, 1) for row in valuations for v in row)


def _class_errors(instance: Instance) -> list[str]:
    cls = instance.valuation_class
    if cls not in VALUATION_CLASSES:
        return [f"unknown valuation class {cls!r}"]
    if cls == IDENTICAL and not is_identical(instance.valuations):
        return ["class mismatch: declared identical but valuation rows differ"]
    if cls == BINARY and not is_binary(instance.valuations):
        return ["class mismatch: declared binary but some value is not 0 or 1"]
    return []


def validate(instance: Instance) -> Instance:
    """Check an instance and return its canonical working form.

    Agents are re-indexed so weights are non-decreasing (stable for ties).
    Items valued 0 by every agent are dropped from the working set and are
    handed to the last (highest-weight) agent when results are restored.

    >>> inst = validate(Instance(["10", "1"], [["8", "0", "10"], ["7", "0", "5"]]))
    >>> inst.weights, inst.agent_labels, inst.item_labels, inst.zero_items
    ((Fraction(1, 1), Fraction(10, 1)), (1, 0), (0, 2), (1,))
    """
    errors = []
    if instance.n == 0:
        errors.append("no agents (n = 0)")
    if len(instance.valuations) != instance.n:
        errors.append(f"{instance.n} weights but {len(instance.valuations)} valuation rows")
    widths = {len(row) for row in instance.valuations}
    if len(widths) > 1:
        errors.append("valuation rows have different lengths")
    for i, w in enumerate(instance.weights):
        if w <= 0:
            errors.append(f"non-positive weight: agent {i} has weight {w}")
    for i, row in enumerate(instance.valuations):
        for o, v in enumerate(row):
            if v < 0:
                errors.append(f"negative valuation: agent {i}, item {o} has value {v}")
    if not errors:
        errors.extend(_class_errors(instance))
    if errors:
        raise InvalidInstance(errors)

    order = sorted(range(instance.n), key=lambda i: instance.weights[i])
    zero = [o for o in range(instance.m) if all(row[o] == 0 for row in instance.valuations)]
    keep = [o for o in range(instance.m) if o not in set(zero)]

    old_agents = instance.agent_labels or tuple(range(instance.n))
    old_items = instance.item_labels or tuple(range(instance.m))
    return Instance(
        weights=tuple(instance.weights[i] for i in order),
        valuations=tuple(tuple(instance.valuations[i][o] for o in keep) for i in order),
        valuation_class=instance.valuation_class,
        agent_labels=tuple(old_agents[i] for i in order),
        item_labels=tuple(old_items[o] for o in keep),
        zero_items=tuple(sorted(instance.zero_items + tuple(old_items[o] for o in zero))),
    )


def derived(instance: Instance) -> DerivedScalars:
    """Scalars the subsidy bounds are stated in.

    >>> d = derived(Instance(["1", "7/2"], [["1"], ["1"]]))
    >>> d.W, d.lcm_denominator, d.gcd, d.reduced_weights
    (Fraction(9, 2), 2, 1, (2, 7))
    """
    V = max((v for row in instance.valuations for v in row), default=Fraction(0))
    W = sum(instance.weights, Fraction(0))
    lcm = math.lcm(*(w.denominator for w in instance.weights)) if instance.weights else 1
    scaled = [int(w * lcm) for w in instance.weights]
    gcd = math.gcd(*scaled) if scaled else 1
    return DerivedScalars(
        V=V,
        W=W,
        lcm_denominator=lcm,
        gcd=gcd,
        reduced_weights=tuple(s // gcd for s in scaled),
    )


def check_allocation(allocation: Allocation, n: int, m: int) -> None:
    """Raise :class:`InvalidAllocation` unless ``allocation`` partitions ``range(m)``."""
    if allocation.n != n:
        raise InvalidAllocation(f"expected {n} bundles, got {allocation.n}")
    seen: set[int] = set()
    for bundle in allocation.bundles:
        for o in bundle:
            if not 0 <= o < m:
                raise InvalidAllocation(f"unknown item {o}")
            if o in seen:
                raise InvalidAllocation(f"overlapping allocation: item {o} given twice")
            seen.add(o)
    if len(seen) != m:
        missing = sorted(set(range(m)) - seen)
        raise InvalidAllocation(f"incomplete allocation: items {missing} unallocated")


def restore_allocation(instance: Instance, allocation: Allocation) -> Allocation:
    """Map an allocation of a validated instance back to the caller's labels."""
    if instance.agent_labels is None:
        return allocation
    bundles: list[list[int]] = [[] for _ in range(instance.n)]
    for k, bundle in enumerate(allocation.bundles):
        bundles[instance.agent_labels[k]].extend(instance.item_labels[o] for o in bundle)
    if instance.n:
        bundles[instance.agent_labels[-1]].extend(instance.zero_items)
    return Allocation(bundles)


def restore_vector(instance: Instance, values: Sequence[Fraction]) -> tuple[Fraction, ...]:
    if instance.agent_labels is None:
        return tuple(values)
    out = [Fraction(0)] * instance.n
    for k, v in enumerate(values):
        out[instance.agent_labels[k]] = v
    return tuple(out)


def working_allocation(instance: Instance, allocation: Allocation) -> Allocation:
    """Inverse of :func:`restore_allocation`; zero-valued items are dropped."""
    if instance.agent_labels is None:
        return allocation
    position = {label: o for o, label in enumerate(instance.item_labels)}
    return Allocation(
        tuple(position[o] for o in allocation.bundles[label] if o in position)
        for label in instance.agent_labels
    )


# --- JSON ------------------------------------------------------------------


def instance_from_json(data: dict) -> Instance:
    if not isinstance(data, dict):
        raise InvalidInstance(["instance must be a JSON object"])
    missing = [k for k in ("weights", "valuations") if k not in data]
    if missing:
        raise InvalidInstance([f"missing field {k!r}" for k in missing])
    weights, valuations = data["weights"], data["valuations"]
    if not isinstance(weights, list) or not isinstance(valuations, list):
        raise InvalidInstance(["weights and valuations must be lists"])
    if not all(isinstance(row, list) for row in valuations):
        raise InvalidInstance(["valuations must be a list of rows"])
    try:
        return Instance(weights, valuations, data.get("class", GENERAL))
    except ValueError as exc:
        raise InvalidInstance([str(exc)]) from exc


def instance_to_json(instance: Instance) -> dict:
    return {
        "weights": [format_rational(w) for w in instance.weights],
        "valuations": [[format_rational(v) for v in row] for row in instance.valuations],
        "class": instance.valuation_class,
    }


def loads_instance(text: str) -> Instance:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInstance([f"malformed JSON: {exc}"]) from exc
    return instance_from_json(data)


def dumps_instance(instance: Instance) -> str:
    return json.dumps(instance_to_json(instance))


def allocation_from_json(data: dict) -> Allocation:
    bundles = data.get("bundles") if isinstance(data, dict) else None
    if not isinstance(bundles, list) or not all(isinstance(b, list) for b in bundles):
        raise InvalidAllocation('allocation must look like {"bundles": [[...], ...]}')
    for bundle in bundles:
        for o in bundle:
            if not isinstance(o, int) or isinstance(o, bool):
                raise InvalidAllocation(f"item index must be an integer, got {o!r}")
        if len(set(bundle)) != len(bundle):
            raise InvalidAllocation("overlapping allocation: repeated item in a bundle")
    return Allocation(bundles)


def subsidies_from_json(data: dict) -> tuple[Fraction, ...]:
    values = data.get("s") if isinstance(data, dict) else None
    if not isinstance(values, list):
        raise ValueError('subsidies must look like {"s": ["0", "2", ...]}')
    subsidies = tuple(parse_rational(v) for v in values)
    if any(s < 0 for s in subsidies):
        raise ValueError("subsidies must be non-negative")
    return subsidies
