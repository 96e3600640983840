"""
Command-line front end.

Every command prints one JSON document on stdout with numbers as exact
rational strings.  Exit codes: 0 ok, 1 invalid input, 2 an emitted solution
failed its own WEF re-check.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from . import envy_graph, oracle, pipeline
from .core import (
    BINARY,
    GENERAL,
    IDENTICAL,
    InvalidAllocation,
    InvalidInstance,
    Solution,
    allocation_from_json,
    check_allocation,
    derived,
    format_rational,
    instance_to_json,
    loads_instance,
    parse_rational,
    subsidies_from_json,
    validate,
)
from .sampling import random_instance


# Short family names accepted by ``gen`` alongside the descriptive ones.
FAMILY_ALIASES = {"thm3.6": "uniform", "thm3.11": "single-item", "ex4.1": "surplus", "prop5.1": "two-fans"}


class InputError(Exception):
    pass


class InvariantViolation(Exception):
    pass


def _fmt(value: Any) -> Any:
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, dict):
        return {k: _fmt(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_fmt(v) for v in value]
    return value


def _read_json(path: str) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON: {exc}") from exc


def _read_instance(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    instance = loads_instance(text)
    return instance, validate(instance)


def _checked(instance, solution: Solution) -> Solution:
    if not envy_graph.check_wef(instance, solution.allocation, solution.subsidies):
        raise InvariantViolation(f"{solution.algorithm}: emitted subsidies do not make the allocation WEF")
    return solution


# --- commands -----------------------------------------------------------------


def cmd_allocate(path: str, algorithm: str) -> dict:
    instance, working = _read_instance(path)
    solution = _checked(instance, pipeline.allocate(instance, algorithm))
    bounds = pipeline.bounds(working)
    return {
        "algorithm": solution.algorithm,
        "bundles": solution.allocation.to_lists(),
        "subsidies": solution.subsidies,
        "total_subsidy": solution.total_subsidy,
        "bound": bounds[solution.algorithm],
        "bounds": bounds,
        "wefable": envy_graph.is_wefable(envy_graph.build(instance, solution.allocation)),
        "wef": solution.certified_wef,
        "wef01": solution.wef01,
    }


def cmd_check(path: str, allocation_path: str, subsidies_path: str | None = None) -> dict:
    instance, _ = _read_instance(path)
    allocation = allocation_from_json(_read_json(allocation_path))
    check_allocation(allocation, instance.n, instance.m)
    graph = envy_graph.build(instance, allocation)
    cycle = envy_graph.positive_cycle(graph)
    report: dict[str, Any] = {"verdict": "WEF-able" if cycle is None else "not WEF-able"}
    if cycle is None:
        report["min_subsidies"] = envy_graph.min_subsidies(instance, allocation)
    else:
        report["cycle"] = list(cycle)
        report["cycle_cost"] = envy_graph.path_cost(graph, cycle + (cycle[0],))
    if subsidies_path is not None:
        try:
            subsidies = subsidies_from_json(_read_json(subsidies_path))
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        if len(subsidies) != instance.n:
            raise InputError(f"expected {instance.n} subsidies, got {len(subsidies)}")
        report["subsidies"] = "WEF" if envy_graph.check_wef(instance, allocation, subsidies) else "not WEF"
    return report


def _second_value(instance) -> Fraction:
    """Largest value held by anyone other than the owner of the overall largest value."""
    if instance.m == 0:
        return Fraction(0)
    top = max(range(instance.n), key=lambda i: max(instance.valuations[i]))
    return max((v for i, row in enumerate(instance.valuations) if i != top for v in row), default=Fraction(0))


def cmd_oracle(path: str) -> dict:
    instance, working = _read_instance(path)
    best, witness = oracle.enumerate_min_subsidy(instance)
    d = derived(working)
    spread = d.W / min(working.weights) - 1
    applicable = [GENERAL] + ([working.valuation_class] if working.valuation_class != GENERAL else [])
    totals = {}
    for name in applicable:
        solution = _checked(instance, pipeline.allocate(instance, name))
        totals[name] = solution.total_subsidy
    return {
        "optimum": best,
        "witness": witness.to_lists(),
        "witness_subsidies": envy_graph.min_subsidies(instance, witness),
        "algorithms": totals,
        "worst_case_lower_bound": spread * d.V,
        "worst_case_lower_bound_second_value": spread * _second_value(working),
    }


def cmd_gen(family: str, weights: Sequence[str], items: int, value: str, eps: str, agent: int) -> dict:
    family = FAMILY_ALIASES.get(family, family)
    try:
        instance = oracle.generate_tight(
            family,
            [parse_rational(w) for w in weights],
            items=items,
            value=parse_rational(value),
            eps=parse_rational(eps),
            agent=agent,
        )
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    tight = oracle.tight_value(family, instance, eps=parse_rational(eps), agent=agent)
    return instance_to_json(instance) | {"tight_total": tight}


def _verify_one(instance, valuation_class: str) -> list[str]:
    working = validate(instance)
    bounds = pipeline.bounds(working)
    problems = []
    for name in dict.fromkeys([GENERAL, valuation_class]):
        solution = pipeline.run(working, name)
        if not solution.certified_wef:
            problems.append(f"{name}: not WEF")
        if solution.total_subsidy > bounds[name]:
            problems.append(f"{name}: total {solution.total_subsidy} above bound {bounds[name]}")
        if name in (IDENTICAL, BINARY) and not solution.wef01:
            problems.append(f"{name}: not WEF(0,1)")
    return problems


def cmd_verify(seed: int, count: int, valuation_class: str) -> dict:
    rng = random.Random(seed)
    failures = []
    for k in range(count):
        instance = random_instance(rng, valuation_class)
        for problem in _verify_one(instance, valuation_class):
            failures.append({"case": k, "instance": instance_to_json(instance), "problem": problem})
    return {"seed": seed, "count": count, "class": valuation_class, "failures": failures}


# --- entry point --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wefsub", description="Weighted envy-free allocation with subsidies")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("allocate", help="run an allocator on an instance")
    p.add_argument("--algo", default="auto", choices=["auto", GENERAL, IDENTICAL, BINARY])
    p.add_argument("instance")

    p = sub.add_parser("check", help="WEF-ability and subsidy check for a given allocation")
    p.add_argument("instance")
    p.add_argument("allocation")
    p.add_argument("--subsidies")

    p = sub.add_parser("oracle", help="exhaustive minimum total subsidy (small instances)")
    p.add_argument("instance")

    p = sub.add_parser("gen", help="emit a worst-case construction")
    p.add_argument("--family", required=True, choices=[*FAMILY_ALIASES, *oracle.FAMILIES])
    p.add_argument("--weights", required=True, help="comma-separated, e.g. 1,2,7/2")
    p.add_argument("--items", type=int, default=1)
    p.add_argument("--value", default="1")
    p.add_argument("--eps", default="1/100")
    p.add_argument("--agent", type=int, default=0)

    p = sub.add_parser("verify", help="check allocators on seeded random instances")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--class", dest="valuation_class", default=GENERAL, choices=[GENERAL, IDENTICAL, BINARY])
    return parser


def dispatch(args: argparse.Namespace) -> dict:
    if args.command == "allocate":
        return cmd_allocate(args.instance, args.algo)
    if args.command == "check":
        return cmd_check(args.instance, args.allocation, args.subsidies)
    if args.command == "oracle":
        return cmd_oracle(args.instance)
    if args.command == "gen":
        return cmd_gen(args.family, args.weights.split(","), args.items, args.value, args.eps, args.agent)
    return cmd_verify(args.seed, args.count, args.valuation_class)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(name)s: %(message)s")
    try:
        report = dispatch(args)
    except InvariantViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InvalidInstance as exc:
        for message in exc.errors:
            print(f"error: {message}", file=sys.stderr)
        return 1
    except (InvalidAllocation, InputError, pipeline.AlgorithmMismatch, oracle.InstanceTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(json.dumps(_fmt(report), indent=2))
    if args.command == "verify" and report["failures"]:
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
